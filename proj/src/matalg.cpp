#include "negadesigns/matalg.hpp"

#include <sstream>

#include "negadesigns/error.hpp"

namespace negadesigns {

std::string_view to_string(Structure s) {
  switch (s) {
    case Structure::Dense: return "dense";
    case Structure::Toeplitz: return "toeplitz";
    case Structure::Cyclic: return "cyclic";
    case Structure::Negacyclic: return "negacyclic";
  }
  return "unknown";
}

std::string to_string(MatrixClass c) {
  switch (c.kind) {
    case MatrixClass::Kind::Hadamard: return "hadamard";
    case MatrixClass::Kind::Conference: return "conference";
    case MatrixClass::Kind::Weighing: return "weighing(" + std::to_string(c.weight) + ")";
  }
  return "unknown";
}

StructuredMatrix::StructuredMatrix(std::size_t order, std::vector<Entry> entries, Structure tag)
    : order_(order), entries_(std::move(entries)), tag_(tag) {
  if (order_ == 0) throw Error(ErrorCode::InvalidInput, "matrix order must be positive");
  if (entries_.size() != order_ * order_) throw Error(ErrorCode::InvalidInput, "entry count is not order^2");
  for (Entry e : entries_) {
    if (e < -1 || e > 1) throw Error(ErrorCode::InvalidInput, "matrix entry outside {-1,0,+1}");
  }
  if (tag_ == Structure::Toeplitz && !is_toeplitz()) throw Error(ErrorCode::NotToeplitz, "Toeplitz tag does not hold");
  if ((tag_ == Structure::Cyclic || tag_ == Structure::Negacyclic) && !matches_shift_structure(tag_)) {
    throw Error(tag_ == Structure::Negacyclic ? ErrorCode::NotNegacyclic : ErrorCode::InvalidInput,
                std::string(to_string(tag_)) + " tag does not hold");
  }
}

StructuredMatrix StructuredMatrix::from_first_row(const TernarySeq& row, Structure tag) {
  if (tag != Structure::Cyclic && tag != Structure::Negacyclic) {
    throw Error(ErrorCode::InvalidInput, "from_first_row needs a cyclic or negacyclic tag");
  }
  const std::size_t n = row.size();
  if (n == 0) throw Error(ErrorCode::InvalidInput, "empty first row");
  std::vector<Entry> e(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j >= i) {
        e[i * n + j] = row[j - i];
      } else {
        const Entry wrapped = row[j + n - i];
        e[i * n + j] = tag == Structure::Negacyclic ? static_cast<Entry>(-wrapped) : wrapped;
      }
    }
  }
  return StructuredMatrix(n, std::move(e), tag, Trusted{});
}

StructuredMatrix StructuredMatrix::identity(std::size_t order) {
  std::vector<Entry> e(order * order, 0);
  for (std::size_t i = 0; i < order; ++i) e[i * order + i] = 1;
  return StructuredMatrix(order, std::move(e));
}

StructuredMatrix StructuredMatrix::parse(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t\r");
    lines.push_back(line.substr(first, last - first + 1));
  }
  if (lines.empty()) throw Error(ErrorCode::Parse, "no matrix rows");
  if (auto colon = lines.front().find(':'); colon != std::string::npos) {
    if (lines.size() != 1) throw Error(ErrorCode::Parse, "shorthand matrix must be a single line");
    const std::string tag = lines.front().substr(0, colon);
    const auto row = TernarySeq::parse(lines.front().substr(colon + 1));
    if (tag == "cyclic") return from_first_row(row, Structure::Cyclic);
    if (tag == "negacyclic") return from_first_row(row, Structure::Negacyclic);
    throw Error(ErrorCode::Parse, "unknown matrix tag '" + tag + "'");
  }
  const std::size_t n = lines.size();
  std::vector<Entry> e;
  e.reserve(n * n);
  for (const auto& l : lines) {
    const auto r = TernarySeq::parse(l);
    if (r.size() != n) throw Error(ErrorCode::Parse, "matrix is not square");
    e.insert(e.end(), r.entries().begin(), r.entries().end());
  }
  return StructuredMatrix(n, std::move(e));
}

TernarySeq StructuredMatrix::row(std::size_t i) const {
  return TernarySeq(std::vector<Entry>(entries_.begin() + i * order_, entries_.begin() + (i + 1) * order_));
}

StructuredMatrix StructuredMatrix::transpose() const {
  std::vector<Entry> e(entries_.size());
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = 0; j < order_; ++j) e[j * order_ + i] = entries_[i * order_ + j];
  // Transposition preserves each shift structure.
  return StructuredMatrix(order_, std::move(e), tag_);
}

StructuredMatrix StructuredMatrix::negated() const {
  std::vector<Entry> e(entries_);
  for (auto& x : e) x = static_cast<Entry>(-x);
  return StructuredMatrix(order_, std::move(e), tag_);
}

StructuredMatrix StructuredMatrix::plus(const StructuredMatrix& other) const {
  if (other.order_ != order_) throw Error(ErrorCode::OrderMismatch, "matrix sum of different orders");
  std::vector<Entry> e(entries_.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    const int s = entries_[i] + other.entries_[i];
    if (s < -1 || s > 1) throw Error(ErrorCode::InvalidInput, "matrix sum leaves {-1,0,+1}");
    e[i] = static_cast<Entry>(s);
  }
  return StructuredMatrix(order_, std::move(e));
}

StructuredMatrix StructuredMatrix::with_zero_diagonal() const {
  std::vector<Entry> e(entries_);
  for (std::size_t i = 0; i < order_; ++i) e[i * order_ + i] = 0;
  return StructuredMatrix(order_, std::move(e));
}

std::vector<long> StructuredMatrix::gram() const {
  const std::size_t n = order_;
  std::vector<long> g(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const Entry* ri = &entries_[i * n];
    for (std::size_t j = i; j < n; ++j) {
      const Entry* rj = &entries_[j * n];
      long s = 0;
      for (std::size_t k = 0; k < n; ++k) s += ri[k] * rj[k];
      g[i * n + j] = s;
      g[j * n + i] = s;
    }
  }
  return g;
}

bool StructuredMatrix::is_toeplitz() const {
  for (std::size_t i = 1; i < order_; ++i)
    for (std::size_t j = 1; j < order_; ++j)
      if ((*this)(i, j) != (*this)(i - 1, j - 1)) return false;
  return true;
}

bool StructuredMatrix::matches_shift_structure(Structure tag) const {
  if (tag == Structure::Dense) return true;
  if (tag == Structure::Toeplitz) return is_toeplitz();
  const auto expected = from_first_row(row(0), tag);
  return expected.entries_ == entries_;
}

bool StructuredMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = i + 1; j < order_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool StructuredMatrix::is_skew_symmetric() const {
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = i; j < order_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  return true;
}

std::string StructuredMatrix::str() const {
  if (tag_ == Structure::Cyclic || tag_ == Structure::Negacyclic) {
    return std::string(to_string(tag_)) + ":" + row(0).str();
  }
  std::string s;
  for (std::size_t i = 0; i < order_; ++i) {
    s += row(i).str();
    s += '\n';
  }
  if (!s.empty()) s.pop_back();
  return s;
}

namespace {

bool gram_is_scalar(const StructuredMatrix& m, long scalar) {
  const auto g = m.gram();
  const std::size_t n = m.order();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g[i * n + j] != (i == j ? scalar : 0)) return false;
  return true;
}

}  // namespace

bool verify(const StructuredMatrix& m, MatrixClass c) {
  const std::size_t n = m.order();
  switch (c.kind) {
    case MatrixClass::Kind::Hadamard:
      for (Entry e : m.entries())
        if (e == 0) return false;
      return gram_is_scalar(m, static_cast<long>(n));
    case MatrixClass::Kind::Conference:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if ((m(i, j) == 0) != (i == j)) return false;
      return gram_is_scalar(m, static_cast<long>(n) - 1);
    case MatrixClass::Kind::Weighing:
      if (c.weight < 1 || static_cast<std::size_t>(c.weight) > n) return false;
      for (std::size_t i = 0; i < n; ++i)
        if (m.row(i).weight() != c.weight) return false;
      return gram_is_scalar(m, c.weight);
  }
  return false;
}

bool is_skew_hadamard(const StructuredMatrix& h) {
  if (!verify(h, MatrixClass::hadamard())) return false;
  const std::size_t n = h.order();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (h(i, j) + h(j, i) != (i == j ? 2 : 0)) return false;
  return true;
}

namespace {

void place(std::vector<Entry>& out, std::size_t n, std::size_t bi, std::size_t bj, const StructuredMatrix& block,
           int sign) {
  const std::size_t t = block.order();
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j)
      out[(bi * t + i) * n + bj * t + j] = static_cast<Entry>(sign * block(i, j));
}

}  // namespace

StructuredMatrix two_block_array(const StructuredMatrix& a, const StructuredMatrix& b) {
  if (a.order() != b.order()) throw Error(ErrorCode::OrderMismatch, "two_block_array blocks differ in order");
  const std::size_t n = 2 * a.order();
  std::vector<Entry> e(n * n);
  place(e, n, 0, 0, a, 1);
  place(e, n, 0, 1, b, 1);
  place(e, n, 1, 0, b.transpose(), -1);
  place(e, n, 1, 1, a.transpose(), 1);
  std::string note = "2T-type";
  if (a.structure() == Structure::Negacyclic && b.structure() == Structure::Negacyclic) note = "2N-type";
  if (a.structure() == Structure::Cyclic && b.structure() == Structure::Cyclic) note = "2C-type";
  StructuredMatrix out(n, std::move(e));
  out.set_provenance(note);
  return out;
}

StructuredMatrix williamson_array(const StructuredMatrix& a, const StructuredMatrix& b, const StructuredMatrix& c,
                                  const StructuredMatrix& d) {
  const std::size_t t = a.order();
  if (b.order() != t || c.order() != t || d.order() != t) {
    throw Error(ErrorCode::OrderMismatch, "williamson_array blocks differ in order");
  }
  const std::size_t n = 4 * t;
  std::vector<Entry> e(n * n);
  const auto at = a.transpose(), bt = b.transpose(), ct = c.transpose(), dt = d.transpose();
  place(e, n, 0, 0, a, 1);
  place(e, n, 0, 1, b, 1);
  place(e, n, 0, 2, c, 1);
  place(e, n, 0, 3, d, 1);
  place(e, n, 1, 0, b, -1);
  place(e, n, 1, 1, a, 1);
  place(e, n, 1, 2, d, -1);
  place(e, n, 1, 3, c, 1);
  place(e, n, 2, 0, ct, -1);
  place(e, n, 2, 1, dt, 1);
  place(e, n, 2, 2, at, 1);
  place(e, n, 2, 3, bt, -1);
  place(e, n, 3, 0, dt, -1);
  place(e, n, 3, 1, ct, -1);
  place(e, n, 3, 2, bt, 1);
  place(e, n, 3, 3, at, 1);
  StructuredMatrix out(n, std::move(e));
  out.set_provenance("williamson-array");
  return out;
}

Structure classify_toeplitz_hadamard(const StructuredMatrix& h) {
  if (!h.is_toeplitz()) throw Error(ErrorCode::NotToeplitz, "matrix is not Toeplitz");
  if (!verify(h, MatrixClass::hadamard())) throw Error(ErrorCode::NotHadamard, "matrix is not Hadamard");
  const std::size_t v = h.order();
  Structure tag = Structure::Cyclic;
  if (v > 1 && h(1, 0) == -h(0, v - 1)) tag = Structure::Negacyclic;
  if (!h.matches_shift_structure(tag)) {
    throw Error(ErrorCode::ImplementationFault, "Toeplitz Hadamard matrix fails its derived shift structure");
  }
  return tag;
}

std::vector<long> gram_naf_decomposition(const StructuredMatrix& a) {
  if (!a.matches_shift_structure(Structure::Negacyclic)) {
    throw Error(ErrorCode::NotNegacyclic, "gram_naf_decomposition needs a negacyclic matrix");
  }
  const std::size_t n = a.order();
  const auto g = a.gram();
  // AA^T is itself negacyclic: check that, then return its first row.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const long expected = j >= i ? g[j - i] : -g[j + n - i];
      if (g[i * n + j] != expected) {
        throw Error(ErrorCode::ImplementationFault, "A A^T is not negacyclic");
      }
    }
  }
  return std::vector<long>(g.begin(), g.begin() + static_cast<long>(n));
}

}  // namespace negadesigns
