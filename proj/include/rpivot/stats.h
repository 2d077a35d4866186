// Copyright 2026 The rpivot Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef RPIVOT_STATS_H_
#define RPIVOT_STATS_H_

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace rpivot {

// Welford accumulator for mean and sample variance.
class RunningStats {
 public:
  void Add(double x) {
    ++count_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (x - mean_);
  }

  std::int64_t count() const { return count_; }
  double mean() const { return mean_; }
  double variance() const {
    return count_ > 1 ? m2_ / static_cast<double>(count_ - 1) : 0.0;
  }
  // Standard error of the mean.
  double stderr_mean() const {
    return count_ > 1 ? std::sqrt(variance() / static_cast<double>(count_))
                      : 0.0;
  }

 private:
  std::int64_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

// Mean and standard error from a sum and a sum of squares over `count`
// observations (sparse accumulation where most observations are zero).
struct SumStats {
  double sum = 0.0;
  double sum_sq = 0.0;

  void Add(double x) {
    sum += x;
    sum_sq += x * x;
  }
  double Mean(std::int64_t count) const {
    return count > 0 ? sum / static_cast<double>(count) : 0.0;
  }
  double StdErr(std::int64_t count) const {
    if (count < 2) return 0.0;
    const double c = static_cast<double>(count);
    const double var = std::max(0.0, (sum_sq - sum * sum / c) / (c - 1.0));
    return std::sqrt(var / c);
  }
};

}  // namespace rpivot

#endif  // RPIVOT_STATS_H_
