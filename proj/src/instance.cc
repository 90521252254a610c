// Copyright 2026 The RASM Authors.
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

#include "rasm/instance.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <string_view>
#include <vector>

#include "rasm/errors.h"

namespace rasm {

CoverageInstance::CoverageInstance(ProbMatrix probs) : probs_(std::move(probs)) {
  if (probs_.rows() < 1 || probs_.cols() < 1) {
    throw ParameterError("instance needs n >= 1 and m >= 1");
  }
  for (Eigen::Index i = 0; i < probs_.rows(); ++i) {
    for (Eigen::Index j = 0; j < probs_.cols(); ++j) {
      const double a = probs_(i, j);
      if (!(a >= 0.0 && a <= 1.0)) {
        throw ParameterError("probability a(" + std::to_string(i) + "," +
                             std::to_string(j) + ") outside [0,1]");
      }
    }
  }
}

void FeasibleRegion::Validate(int n) const {
  if (k < 0 || k > n) {
    throw ParameterError("cardinality budget k=" + std::to_string(k) +
                         " outside [0, " + std::to_string(n) + "]");
  }
}

namespace {

uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Uniform on [0, 1] from the top 53 bits.
double UnitDraw(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> Tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) {
    line = line.substr(0, hash);
  }
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i > start) {
      out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
  }
  return out;
}

template <typename T>
bool ParseNumber(std::string_view text, T& value) {
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc() && ptr == last;
}

}  // namespace

CoverageInstance GenerateInstance(const GeneratorParams& p) {
  if (p.n < 1 || p.m < 1) throw ParameterError("generator needs n, m >= 1");
  if (!(p.prob_low >= 0.0 && p.prob_high <= 1.0 && p.prob_low <= p.prob_high)) {
    throw ParameterError("probability range must satisfy 0 <= low <= high <= 1");
  }
  std::mt19937_64 gen(SplitMix64(p.seed));
  ProbMatrix probs(p.n, p.m);
  const double width = p.prob_high - p.prob_low;
  for (int i = 0; i < p.n; ++i) {
    for (int j = 0; j < p.m; ++j) {
      probs(i, j) = std::min(p.prob_high, p.prob_low + width * UnitDraw(gen));
    }
  }
  return CoverageInstance(std::move(probs));
}

void SaveInstance(const CoverageInstance& instance, std::ostream& out) {
  out << "rasc " << instance.num_sets() << ' ' << instance.num_items() << '\n';
  char buf[32];
  for (int i = 0; i < instance.num_sets(); ++i) {
    for (int j = 0; j < instance.num_items(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", instance.prob(i, j));
      if (j > 0) out << ' ';
      out << buf;
    }
    out << '\n';
  }
}

void SaveInstance(const CoverageInstance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  SaveInstance(instance, out);
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

CoverageInstance LoadInstance(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  int m = -1;
  ProbMatrix probs;
  int row = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::vector<Token> tokens = Tokenize(line);
    if (tokens.empty()) continue;
    if (n < 0) {
      if (tokens[0].text != "rasc") {
        throw ParseError("expected header 'rasc <n> <m>'", line_no,
                         tokens[0].column);
      }
      if (tokens.size() != 3) {
        throw ParseError("header must be 'rasc <n> <m>'", line_no,
                         tokens[0].column);
      }
      if (!ParseNumber(tokens[1].text, n) || n < 1) {
        throw ParseError("n must be a positive integer", line_no,
                         tokens[1].column);
      }
      if (!ParseNumber(tokens[2].text, m) || m < 1) {
        throw ParseError("m must be a positive integer", line_no,
                         tokens[2].column);
      }
      probs.resize(n, m);
      continue;
    }
    if (row >= n) {
      throw ParseError("more than n=" + std::to_string(n) + " probability rows",
                       line_no, tokens[0].column);
    }
    if (static_cast<int>(tokens.size()) != m) {
      const int col = static_cast<int>(tokens.size()) > m
                          ? tokens[m].column
                          : static_cast<int>(line.size()) + 1;
      throw ParseError("row " + std::to_string(row) + " has " +
                           std::to_string(tokens.size()) + " entries, expected " +
                           std::to_string(m),
                       line_no, col);
    }
    for (int j = 0; j < m; ++j) {
      double a = 0.0;
      if (!ParseNumber(tokens[j].text, a)) {
        throw ParseError("entry a(" + std::to_string(row) + "," +
                             std::to_string(j) + ") = '" +
                             std::string(tokens[j].text) + "' is not a number",
                         line_no, tokens[j].column);
      }
      if (!(a >= 0.0 && a <= 1.0)) {
        throw ParseError("entry a(" + std::to_string(row) + "," +
                             std::to_string(j) + ") = " +
                             std::string(tokens[j].text) + " outside [0,1]",
                         line_no, tokens[j].column);
      }
      probs(row, j) = a;
    }
    ++row;
  }
  if (n < 0) throw ParseError("missing header 'rasc <n> <m>'", line_no + 1, 1);
  if (row != n) {
    throw ParseError("expected " + std::to_string(n) + " probability rows, got " +
                         std::to_string(row),
                     line_no + 1, 1);
  }
  return CoverageInstance(std::move(probs));
}

CoverageInstance LoadInstance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return LoadInstance(in);
}

}  // namespace rasm
