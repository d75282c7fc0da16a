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

#ifndef CEPNET_TESTS_SUPPORT_PREDICT_HARNESS_HPP
#define CEPNET_TESTS_SUPPORT_PREDICT_HARNESS_HPP

#include "cepnet/operators/evaluators.hpp"
#include "cepnet/operators/window.hpp"

#include "support/oracles.hpp"

#include <functional>

namespace cepnet::oracle {

struct PlugRun
{
  std::vector<PredictionTuple> predictions;
};

/// Feeds one plug tuple per second through a 1m window into predict_eval.
inline PlugRun
run_plug(CombineMode mode, const std::function<double(Timestamp)>& load, Timestamp until)
{
  PredictState state;
  state.config = PredictConfig{60'000, 300'000, 600'000, mode};
  WindowState window;
  window.extent = WindowExtent::time(60'000);
  auto columns = columns_of(plug_schema(), "PLUG_S1");
  PlugRun run;
  for (Timestamp ts = 1000; ts <= until; ts += 1000) {
    window.insert(Tuple{ts, "plug", {static_cast<double>(ts), std::string("1"), load(ts), 1.0, 7.0, 0.0, 0.0}});
    if (auto p = predict_eval(state, relation_from_tuples(columns, window.buffer), ts)) {
      run.predictions.push_back(*p);
    }
  }
  return run;
}

/// Direct arithmetic for a tuple every second: the window at T holds
/// T-59000..T, a slot's recorded average is the window at its last second,
/// and the prediction at epoch E looks up slot E/60000 + 2 modulo 10.
inline double
expected_prediction(CombineMode mode, const std::function<double(Timestamp)>& load, Timestamp epoch)
{
  auto windowAvg = [&](Timestamp t) {
    double sum = 0;
    int n = 0;
    for (Timestamp ts = std::max<Timestamp>(1000, t - 59'000); ts <= t; ts += 1000) {
      sum += load(ts);
      ++n;
    }
    return sum / n;
  };
  std::int64_t slot = epoch / 60'000;
  std::vector<double> history;
  for (std::int64_t s = slot + 2 - 10; s >= 0; s -= 10) {
    history.push_back(windowAvg(s * 60'000 + 59'000));
  }
  double avg = windowAvg(epoch);
  return history.empty() ? avg : plain_combine(avg, plain_median(history), mode);
}

} // namespace cepnet::oracle

#endif // CEPNET_TESTS_SUPPORT_PREDICT_HARNESS_HPP
