#include "dzeta/matrices.hpp"

#include <algorithm>
#include <sstream>

namespace dzeta {

namespace {

void require_level(int level, int lo) {
  if (level < lo || level > 3)
    throw std::invalid_argument("level must be " + std::to_string(lo) + ", .., 3");
}

bool in_index_set(long k, const IndexPair& p) {
  return p.m1 >= 3 && p.m2 >= 3 && p.m1 % 2 == 1 && p.m2 % 2 == 1 && p.m1 + p.m2 == k;
}

}  // namespace

Rat depth1_coeff(int level, long p) {
  require_level(level, 1);
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("depth1_coeff: p must be odd and >= 3");
  switch (level) {
    case 1:
      return Rat(1);
    case 2:
      return pow_rat(2, 1 - p) - 1;
    default:
      return (pow_rat(3, 1 - p) - 1) / 2;
  }
}

Rat entry_e(const IndexPair& m, const IndexPair& n) {
  Rat a = Rat(binom(m.m1 - 1, m.m1 - n.m1)) * parity_sign(n.m1);
  Rat b = Rat(binom(m.m1 - 1, m.m1 - n.m2)) * parity_sign(m.m1 - n.m2);
  return a + b;
}

Rat entry(int level, long k, const IndexPair& m, const IndexPair& n) {
  require_level(level, 1);
  if (!in_index_set(k, m) || !in_index_set(k, n))
    throw std::invalid_argument("entry: index pair not in oo(k)");
  Rat acc = entry_e(m, n);
  if (m == n) acc += depth1_coeff(level, m.m2);
  return depth1_coeff(level, m.m1) * acc;
}

RatMatrix build_c(int level, long k) {
  require_level(level, 1);
  const auto rows = totally_odd_index(k);
  const Index s = static_cast<Index>(rows.size());
  RatMatrix c(s, s);
  for (Index i = 0; i < s; ++i)
    for (Index j = 0; j < s; ++j)
      c(i, j) = entry(level, k, rows[static_cast<size_t>(i)],
                      rows[static_cast<size_t>(s - 1 - j)]);  // columns follow oo'(k)
  return c;
}

RatMatrix build_d(int level, long k) {
  require_level(level, 2);
  const auto rows = totally_odd_index(k);
  const Index s = static_cast<Index>(rows.size());
  RatMatrix d = RatMatrix::Zero(s, s);
  for (Index i = 0; i < s; ++i) d(i, i) = 1 / depth1_coeff(level, rows[static_cast<size_t>(i)].m1);
  return d;
}

RatMatrix build_dc(int level, long k) {
  require_level(level, 2);
  const auto rows = totally_odd_index(k);
  const Index s = static_cast<Index>(rows.size());
  RatMatrix product = build_d(level, k) * build_c(level, k);
  RatMatrix direct(s, s);
  for (Index i = 0; i < s; ++i)
    for (Index j = 0; j < s; ++j) {
      const IndexPair& m = rows[static_cast<size_t>(i)];
      const IndexPair& n = rows[static_cast<size_t>(s - 1 - j)];
      Rat v = entry_e(m, n);
      if (m == n) v += depth1_coeff(level, m.m2);
      direct(i, j) = v;
    }
  if (!matrices_equal(product, direct))
    throw std::logic_error("build_dc: product and direct formula disagree");
  return product;
}

bool decomposition_check(long k) {
  if (k < 0 || k % 2 != 0) throw std::invalid_argument("decomposition_check: k must be even");
  const auto rows = totally_odd_index(k);
  const Index s = static_cast<Index>(rows.size());
  RatMatrix a = RatMatrix::Zero(s, s), b = RatMatrix::Zero(s, s), cm(s, s), j(s, s);
  for (Index i = 0; i < s; ++i) {
    const IndexPair& m = rows[static_cast<size_t>(i)];
    a(i, s - 1 - i) = pow_rat(2, 1 - m.m1);  // delta sits on the anti-diagonal
    b(i, s - 1 - i) = pow_rat(2, 1 - m.m2);
    for (Index jj = 0; jj < s; ++jj) {
      const IndexPair& n = rows[static_cast<size_t>(s - 1 - jj)];
      cm(i, jj) = pow_rat(2, 1 - m.m1) * entry_e(m, n);
      j(i, jj) = (jj == s - 1 - i) ? Rat(1) : Rat(0);
    }
  }
  RatMatrix lhs = build_c(2, k);
  const Rat jcoef = Rat(2) + pow_rat(2, 2 - k);
  RatMatrix rhs = -a - b + cm - build_c(1, k) + jcoef * j;
  return matrices_equal(lhs, rhs);
}

MatrixBundle build_bundle(int level, long k) {
  require_level(level, 1);
  MatrixBundle bundle;
  bundle.level = level;
  bundle.weight = k;
  bundle.index = totally_odd_index(k);
  bundle.c = build_c(level, k);
  if (level >= 2) {
    bundle.d = build_d(level, k);
    bundle.dc = build_dc(level, k);
  }
  return bundle;
}

nlohmann::ordered_json matrix_to_json(const RatMatrix& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(rat_str(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix_from_json: expected array");
  const Index rows = static_cast<Index>(j.size());
  Index cols = rows == 0 ? 0 : static_cast<Index>(j.at(0).size());
  RatMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const auto& row = j.at(static_cast<size_t>(i));
    if (static_cast<Index>(row.size()) != cols)
      throw std::invalid_argument("matrix_from_json: ragged rows");
    for (Index c = 0; c < cols; ++c)
      m(i, c) = parse_rat(row.at(static_cast<size_t>(c)).get<std::string>());
  }
  return m;
}

nlohmann::ordered_json bundle_to_json(const MatrixBundle& b) {
  nlohmann::ordered_json j;
  j["level"] = b.level;
  j["weight"] = b.weight;
  j["c"] = matrix_to_json(b.c);
  if (b.level >= 2) {
    j["d"] = matrix_to_json(b.d);
    j["dc"] = matrix_to_json(b.dc);
  }
  nlohmann::ordered_json idx = nlohmann::ordered_json::array();
  for (const IndexPair& p : b.index) idx.push_back({p.m1, p.m2});
  j["index"] = std::move(idx);
  return j;
}

MatrixBundle bundle_from_json(const nlohmann::json& j) {
  MatrixBundle b;
  b.level = j.at("level").get<int>();
  b.weight = j.at("weight").get<long>();
  b.c = matrix_from_json(j.at("c"));
  if (b.level >= 2) {
    b.d = matrix_from_json(j.at("d"));
    b.dc = matrix_from_json(j.at("dc"));
  }
  for (const auto& p : j.at("index"))
    b.index.push_back({p.at(0).get<long>(), p.at(1).get<long>()});
  return b;
}

std::string bundle_to_csv(const MatrixBundle& b, const std::vector<std::string>& parts) {
  std::ostringstream os;
  os << "part,i,j,value\n";
  auto emit = [&os](const std::string& name, const RatMatrix& m) {
    for (Index i = 0; i < m.rows(); ++i)
      for (Index j = 0; j < m.cols(); ++j)
        os << name << "," << i << "," << j << "," << rat_str(m(i, j)) << "\n";
  };
  for (const std::string& p : parts) {
    if (p == "c")
      emit("c", b.c);
    else if (p == "d")
      emit("d", b.d);
    else if (p == "dc")
      emit("dc", b.dc);
    else
      throw std::invalid_argument("bundle_to_csv: unknown part '" + p + "'");
  }
  return os.str();
}

}  // namespace dzeta
