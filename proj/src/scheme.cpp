// Copyright 2026 The kdensity Authors.
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

#include "kdensity/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>

namespace kdensity {

CollapsedAlgebra class_constants(const Group& g, const ClassPartition& p) {
  const std::size_t d = p.size();
  CollapsedAlgebra ca;
  ca.num_classes = d;
  ca.sizes = p.sizes;
  ca.constants.assign(d * d * d, 0);
  // a_ijk counts x in C_i with x^-1 c_k in C_j, for the fixed c_k.
  for (std::size_t k = 0; k < d; ++k) {
    const std::size_t ck = p.representatives[k];
    for (std::size_t x = 0; x < g.order(); ++x) {
      const std::size_t y = g.product_index(g.inverse_index(x), ck);
      ++ca.constants[(p.class_of[x] * d + p.class_of[y]) * d + k];
    }
  }
  return ca;
}

std::string check_algebra(const CollapsedAlgebra& ca) {
  const std::size_t d = ca.num_classes;
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k)
      if (ca.a(0, j, k) != (j == k ? 1 : 0)) return "B_0 is not the identity";
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < d; ++k) s += ca.a(i, j, k) * static_cast<std::int64_t>(ca.sizes[k]);
      if (s != static_cast<std::int64_t>(ca.sizes[i] * ca.sizes[j]))
        return "class size identity fails at (" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t l = i + 1; l < d; ++l)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
          std::int64_t lhs = 0, rhs = 0;
          for (std::size_t m = 0; m < d; ++m) {
            lhs += ca.a(i, j, m) * ca.a(l, m, k);
            rhs += ca.a(l, j, m) * ca.a(i, m, k);
          }
          if (lhs != rhs)
            return "B_" + std::to_string(i) + " and B_" + std::to_string(l) + " do not commute";
        }
  return {};
}

namespace {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

Eigen::MatrixXd class_matrix(const CollapsedAlgebra& ca, std::size_t i) {
  const std::size_t d = ca.num_classes;
  Eigen::MatrixXd b(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) b(j, k) = static_cast<double>(ca.a(i, j, k));
  return b;
}

// Inverse iteration on the complex matrix m near the eigenvalue lambda,
// normalized to v(0) = 1.
CVector refine(const CMatrix& m, std::complex<double> lambda, CVector v) {
  const auto d = m.rows();
  const double scale = std::max(1.0, std::abs(lambda));
  const CMatrix shifted = m - (lambda + std::complex<double>(1e-11 * scale, 0)) * CMatrix::Identity(d, d);
  Eigen::PartialPivLU<CMatrix> lu(shifted);
  for (int iter = 0; iter < 3; ++iter) {
    CVector next = lu.solve(v);
    if (!next.allFinite() || std::abs(next(0)) == 0.0) break;
    v = next / next(0);
  }
  return v;
}

std::optional<EigenTable> try_diagonalize(const CollapsedAlgebra& ca, const ClassPartition& p,
                                          std::uint64_t seed) {
  const std::size_t d = ca.num_classes;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coef(0.5, 1.5);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  std::vector<Eigen::MatrixXd> bs;
  for (std::size_t i = 0; i < d; ++i) {
    bs.push_back(class_matrix(ca, i));
    // Dividing by |C_i| keeps every row of the combination of size O(1).
    m += (coef(rng) / static_cast<double>(ca.sizes[i])) * bs.back();
  }

  Eigen::EigenSolver<Eigen::MatrixXd> es(m, true);
  if (es.info() != Eigen::Success) return std::nullopt;
  const CVector lambdas = es.eigenvalues();
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b)
      if (std::abs(lambdas(a) - lambdas(b)) < 1e-7 * (1.0 + std::abs(lambdas(a))))
        return std::nullopt;  // degenerate combination, caller reseeds

  const CMatrix mc = m.cast<std::complex<double>>();
  EigenTable et;
  et.class_sizes = p.sizes;
  et.inverse_class_map = p.inverse_class_map;
  std::size_t order = 0;
  for (auto s : p.sizes) order += s;
  et.group_order = order;

  for (std::size_t r = 0; r < d; ++r) {
    CVector v = es.eigenvectors().col(static_cast<Eigen::Index>(r));
    if (std::abs(v(0)) < 1e-12) return std::nullopt;
    v /= v(0);
    v = refine(mc, lambdas(r), v);

    EigenRow row;
    row.omega.resize(d);
    row.exact.resize(d);
    for (std::size_t i = 0; i < d; ++i) {
      std::complex<double> w = v(static_cast<Eigen::Index>(i));
      const double scale = std::max(1.0, static_cast<double>(p.sizes[i]));
      if (std::abs(w.imag()) < 1e-9 * scale) w = {w.real(), 0.0};
      const double nearest = std::round(w.real());
      if (w.imag() == 0.0 && std::abs(w.real() - nearest) < 1e-9 * scale) {
        w = {nearest, 0.0};
        row.exact[i] = make_rational(static_cast<std::int64_t>(nearest));
      }
      row.omega[i] = w;
    }

    // Residual of B_i w = w_i w for every class.
    for (std::size_t i = 0; i < d; ++i) {
      const CVector lhs = bs[i].cast<std::complex<double>>() * v;
      const double scale = std::max(1.0, static_cast<double>(p.sizes[i])) * std::max(1.0, v.cwiseAbs().maxCoeff());
      if ((lhs - v(static_cast<Eigen::Index>(i)) * v).cwiseAbs().maxCoeff() > 1e-6 * scale)
        throw std::runtime_error("eigenrows: eigenvector residual too large");
    }

    double norm = 0;
    for (std::size_t i = 0; i < d; ++i) norm += std::norm(row.omega[i]) / static_cast<double>(p.sizes[i]);
    const double m_real = static_cast<double>(order) / norm;
    const double m_round = std::round(m_real);
    if (m_round < 1 || std::abs(m_real - m_round) > 1e-6 * m_round)
      throw std::runtime_error("eigenrows: multiplicity " + std::to_string(m_real) + " is not an integer");
    row.multiplicity = static_cast<std::size_t>(m_round);
    et.rows.push_back(std::move(row));
  }

  std::size_t total = 0;
  for (const auto& row : et.rows) total += row.multiplicity;
  if (total != order)
    throw std::runtime_error("eigenrows: multiplicities sum to " + std::to_string(total) + ", not |G|");

  // Trivial row first, then by multiplicity and values.
  auto is_trivial = [&](const EigenRow& row) {
    for (std::size_t i = 0; i < d; ++i)
      if (std::abs(row.omega[i] - std::complex<double>(static_cast<double>(p.sizes[i]), 0)) > 1e-6) return false;
    return true;
  };
  std::stable_sort(et.rows.begin(), et.rows.end(), [&](const EigenRow& x, const EigenRow& y) {
    const bool tx = is_trivial(x), ty = is_trivial(y);
    if (tx != ty) return tx;
    if (x.multiplicity != y.multiplicity) return x.multiplicity < y.multiplicity;
    for (std::size_t i = 0; i < d; ++i) {
      const auto a = x.omega[i], b = y.omega[i];
      if (std::abs(a.real() - b.real()) > 1e-9) return a.real() > b.real();
      if (std::abs(a.imag() - b.imag()) > 1e-9) return a.imag() > b.imag();
    }
    return false;
  });
  if (!is_trivial(et.rows.front())) throw std::runtime_error("eigenrows: trivial row missing");
  return et;
}

}  // namespace

EigenTable eigenrows(const CollapsedAlgebra& ca, const ClassPartition& p,
                     std::vector<std::vector<std::size_t>> blocks, std::uint64_t seed) {
  if (auto why = check_algebra(ca); !why.empty()) throw std::runtime_error("eigenrows: " + why);
  for (int attempt = 0; attempt < 8; ++attempt) {
    if (auto et = try_diagonalize(ca, p, seed + static_cast<std::uint64_t>(attempt))) {
      et->blocks = std::move(blocks);
      return *et;
    }
  }
  throw std::runtime_error("eigenrows: no separating combination found");
}

SchemeData build_scheme(const Group& g) {
  SchemeData s;
  s.classes = conjugacy_classes(g);
  s.algebra = class_constants(g, s.classes);
  s.table = eigenrows(s.algebra, s.classes, rational_classes(g, s.classes));
  return s;
}

void check_inverse_closed(const EigenTable& et, const ClassSelection& t) {
  for (std::size_t c : t.classes) {
    if (c == 0 || c >= et.num_classes()) throw std::invalid_argument("class selection: invalid class index");
    if (!std::binary_search(t.classes.begin(), t.classes.end(), et.inverse_class_map[c]))
      throw std::invalid_argument("class selection is not closed under inverses");
  }
}

ClassSelection complement(const EigenTable& et, const ClassSelection& t) {
  ClassSelection out;
  for (std::size_t c = 1; c < et.num_classes(); ++c)
    if (!std::binary_search(t.classes.begin(), t.classes.end(), c)) out.classes.push_back(c);
  return out;
}

std::size_t selection_size(const EigenTable& et, const ClassSelection& t) {
  std::size_t n = 0;
  for (std::size_t c : t.classes) n += et.class_sizes[c];
  return n;
}

std::vector<double> row_values(const EigenTable& et, const ClassSelection& t) {
  check_inverse_closed(et, t);
  std::vector<double> out;
  for (const auto& row : et.rows) {
    std::complex<double> s = 0;
    for (std::size_t c : t.classes) s += row.omega[c];
    if (std::abs(s.imag()) > 1e-9 * std::max(1.0, std::abs(s.real())))
      throw std::runtime_error("union eigenvalue has a non-negligible imaginary part");
    out.push_back(s.real());
  }
  return out;
}

std::vector<SpectrumEntry> union_spectrum(const EigenTable& et, const ClassSelection& t) {
  const auto values = row_values(et, t);
  std::vector<SpectrumEntry> out;
  for (std::size_t r = 0; r < values.size(); ++r) {
    const double scale = std::max(1.0, std::abs(values[r]));
    std::optional<Rational> exact;
    if (std::abs(values[r] - std::round(values[r])) < 1e-9 * scale)
      exact = make_rational(static_cast<std::int64_t>(std::round(values[r])));
    const double v = exact ? std::round(values[r]) : values[r];
    auto it = std::find_if(out.begin(), out.end(), [&](const SpectrumEntry& e) {
      return std::abs(e.value - v) < 1e-7 * scale;
    });
    if (it != out.end()) {
      it->multiplicity += et.rows[r].multiplicity;
    } else {
      out.push_back({v, exact, et.rows[r].multiplicity});
    }
  }
  std::sort(out.begin(), out.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.value > b.value; });
  return out;
}

nlohmann::json to_json(const EigenTable& et) {
  nlohmann::json j;
  j["group_order"] = et.group_order;
  j["class_sizes"] = et.class_sizes;
  j["inverse_class_map"] = et.inverse_class_map;
  j["blocks"] = et.blocks;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : et.rows) {
    nlohmann::json r;
    r["multiplicity"] = row.multiplicity;
    nlohmann::json om = nlohmann::json::array();
    for (std::size_t i = 0; i < row.omega.size(); ++i) {
      if (row.exact[i]) {
        om.push_back(to_string(*row.exact[i]));
      } else {
        om.push_back({{"re", row.omega[i].real()}, {"im", row.omega[i].imag()}, {"float", true}});
      }
    }
    r["omega"] = om;
    rows.push_back(r);
  }
  j["rows"] = rows;
  return j;
}

nlohmann::json to_json(const std::vector<SpectrumEntry>& spectrum) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : spectrum) {
    nlohmann::json j;
    if (e.exact) {
      j["value"] = to_string(*e.exact);
    } else {
      j["value"] = e.value;
      j["float"] = true;
    }
    j["multiplicity"] = e.multiplicity;
    out.push_back(j);
  }
  return out;
}

}  // namespace kdensity
