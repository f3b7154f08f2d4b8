// ctcfst/emissions.cc

// Copyright 2026  The ctcfst authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "ctcfst/emissions.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "ctcfst/fst-io.h"
#include "ctcfst/semiring.h"

namespace ctcfst {

DenseEmissions ReadEmissionsTsv(std::istream &is) {
  std::string line;
  if (!std::getline(is, line)) CTCFST_ERR << "emissions file is empty";
  std::string header = line;
  if (!header.empty() && header[0] == '#') header.erase(0, 1);
  std::istringstream header_tokens(header);
  int64_t frames = -1, units = -1;
  if (!(header_tokens >> frames >> units) || frames < 0 || units < 1)
    CTCFST_ERR << "malformed emissions header \"" << line
               << "\" (expected \"#T N\")";
  std::string extra;
  if (header_tokens >> extra)
    CTCFST_ERR << "malformed emissions header \"" << line << "\"";

  DenseEmissions em(static_cast<int32_t>(frames), static_cast<int32_t>(units));
  for (int32_t t = 0; t < em.frames; ++t) {
    if (!std::getline(is, line))
      CTCFST_ERR << "emissions row " << t << " missing (header said "
                 << em.frames << " frames)";
    std::istringstream tokens(line);
    std::string token;
    for (int32_t u = 0; u < em.units; ++u) {
      if (!(tokens >> token))
        CTCFST_ERR << "emissions row " << t << " has fewer than " << em.units
                   << " columns";
      em.At(t, u) = ParseDouble(token);
      if (std::isnan(em.At(t, u)))
        CTCFST_ERR << "emissions row " << t << " column " << u << " is NaN";
    }
    if (tokens >> token)
      CTCFST_ERR << "emissions row " << t << " has more than " << em.units
                 << " columns";
  }
  while (std::getline(is, line)) {
    std::istringstream tokens(line);
    std::string token;
    if (tokens >> token)
      CTCFST_ERR << "unexpected content after " << em.frames
                 << " emissions rows";
  }
  return em;
}

DenseEmissions ReadEmissionsTsv(const std::string &path) {
  std::ifstream is(path);
  if (!is) CTCFST_ERR << "cannot open \"" << path << "\"";
  return ReadEmissionsTsv(is);
}

void WriteEmissionsTsv(const DenseEmissions &em, std::ostream &os) {
  os << '#' << em.frames << ' ' << em.units << '\n';
  for (int32_t t = 0; t < em.frames; ++t) {
    for (int32_t u = 0; u < em.units; ++u) {
      if (u) os << '\t';
      os << FormatDouble(em.At(t, u));
    }
    os << '\n';
  }
}

void WriteEmissionsTsv(const DenseEmissions &em, const std::string &path) {
  std::ofstream os(path);
  if (!os) CTCFST_ERR << "cannot open \"" << path << "\" for writing";
  WriteEmissionsTsv(em, os);
  if (!os) CTCFST_ERR << "error writing \"" << path << "\"";
}

void CheckNormalized(const DenseEmissions &em, double tolerance) {
  for (int32_t t = 0; t < em.frames; ++t) {
    double log_sum = kLogZero;
    for (int32_t u = 0; u < em.units; ++u)
      log_sum = LogAdd(log_sum, em.At(t, u));
    if (!(std::fabs(log_sum) <= tolerance))
      CTCFST_ERR << "emissions row " << t << " has log-sum-exp " << log_sum
                 << ", expected 0";
  }
}

void NormalizeRows(DenseEmissions &em) {
  for (int32_t t = 0; t < em.frames; ++t) {
    double log_sum = kLogZero;
    for (int32_t u = 0; u < em.units; ++u)
      log_sum = LogAdd(log_sum, em.At(t, u));
    CTCFST_ASSERT(log_sum != kLogZero);
    for (int32_t u = 0; u < em.units; ++u) em.At(t, u) -= log_sum;
  }
}

}  // namespace ctcfst
