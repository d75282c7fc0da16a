/*
    Copyright (C) 2026 The cepnet authors

    Licensed under the Apache License, Version 2.0 (the "License");
    you may not use this file except in compliance with the License.
    You may obtain a copy of the License at

        https://www.apache.org/licenses/LICENSE-2.0

    Unless required by applicable law or agreed to in writing, software
    distributed under the License is distributed on an "AS IS" BASIS,
    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
    See the License for the specific language governing permissions and
    limitations under the License.
*/

// Writes the synthetic GPS and smart-plug datasets used by the shipped scenarios.

#include "cepnet/sim/dataset.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

int
main(int argc, char** argv)
{
  using namespace cepnet;

  CLI::App app{"Generate seeded GPS and plug CSVs"};
  std::string outDir = "data";
  std::uint64_t seed = 2019;
  std::size_t gpsRows = 300;
  std::size_t plugRows = 900;
  app.add_option("outdir", outDir, "Output directory");
  app.add_option("--seed", seed, "Generator seed");
  app.add_option("--gps-rows", gpsRows, "Rows per GPS file")->check(CLI::Range(1, 1000));
  app.add_option("--plug-rows", plugRows, "Rows per plug file")->check(CLI::Range(1, 1000));
  CLI11_PARSE(app, argc, argv);

  std::filesystem::create_directories(outDir);
  auto write = [&](const std::string& file, const Dataset& ds) {
    std::ofstream out(std::filesystem::path(outDir) / file);
    write_dataset(out, ds);
    if (!out) {
      std::cerr << "error: cannot write " << file << '\n';
      std::exit(3);
    }
  };

  GpsProfile g1;
  g1.sensorId = "1";
  GpsProfile g2;
  g2.sensorId = "2";
  g2.latitude = 49.88;
  g2.longitude = 8.66;
  write("gps1.csv", generate_gps(seed, gpsRows, g1));
  write("gps2.csv", generate_gps(seed + 1, gpsRows, g2));

  PlugProfile p1;
  p1.plugId = "1";
  PlugProfile p2;
  p2.plugId = "2";
  p2.householdId = "1";
  p2.base = 20;
  write("plug1.csv", generate_plug(seed + 2, plugRows, p1));
  write("plug2.csv", generate_plug(seed + 3, plugRows, p2));
  return 0;
}
