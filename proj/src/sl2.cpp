#include "hhcalc/sl2.hpp"

#include <cctype>
#include <vector>

#include "hhcalc/linalg.hpp"

namespace hhcalc {

namespace {

constexpr char kNames[3] = {'e', 'h', 'f'};

Mat2 mat2(const Field& f) { return {{{f.zero(), f.zero()}, {f.zero(), f.zero()}}}; }

Mat2 mul2(const Mat2& a, const Mat2& b) {
  Mat2 out = mat2(a[0][0].field());
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  }
  return out;
}

Mat2 identity2(const Field& f) {
  Mat2 m = mat2(f);
  m[0][0] = m[1][1] = f.one();
  return m;
}

Mat4 zero4(const Field& f) {
  Mat4 m;
  for (auto& row : m) row.fill(f.zero());
  return m;
}

Mat4 identity4(const Field& f) {
  Mat4 m = zero4(f);
  for (int i = 0; i < 4; ++i) m[i][i] = f.one();
  return m;
}

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 m = zero4(a[0][0].field());
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) m[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
      }
    }
  }
  return m;
}

Mat4 mul4(const Mat4& a, const Mat4& b) {
  Mat4 m = zero4(a[0][0].field());
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      for (int k = 0; k < 4; ++k) m[i][j] += a[i][k] * b[k][j];
    }
  }
  return m;
}

Mat4 add4(const Mat4& a, const Mat4& b, const Scalar& s) {
  Mat4 m = a;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m[i][j] += s * b[i][j];
  }
  return m;
}

SparseVector flatten(const Mat4& m) {
  SparseVector v;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) v.set(static_cast<std::size_t>(4 * i + j), m[i][j]);
  }
  return v;
}

/// Nullity of the linear map whose columns are given.
std::size_t nullity(std::size_t rows, const Field& f, std::vector<SparseVector> cols) {
  const std::size_t n = cols.size();
  return n - rank(SparseMatrix::from_columns(rows, f, std::move(cols)));
}

SparseVector coords(const SL2Element& x, std::size_t offset) {
  SparseVector v;
  for (std::size_t k = 0; k < 3; ++k) v.set(offset + k, x.c[k]);
  return v;
}

}  // namespace

SL2Element SL2Element::zero(const Field& field) { return {{field.zero(), field.zero(), field.zero()}}; }

SL2Element SL2Element::basis(std::size_t k, const Field& field) {
  SL2Element x = zero(field);
  x.c.at(k) = field.one();
  return x;
}

SL2Element SL2Element::from_matrix(const Mat2& m) {
  if (!(m[0][0] + m[1][1]).is_zero()) throw DomainError("matrix is not traceless");
  return {{m[0][1], m[0][0], m[1][0]}};
}

Mat2 SL2Element::matrix() const { return {{{c[1], c[0]}, {c[2], -c[1]}}}; }

SL2Element SL2Element::operator+(const SL2Element& o) const {
  return {{c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2]}};
}

SL2Element SL2Element::operator*(const Scalar& s) const { return {{c[0] * s, c[1] * s, c[2] * s}}; }

Scalar killing(const SL2Element& a, const SL2Element& b) {
  const Mat2 p = mul2(a.matrix(), b.matrix());
  return p[0][0] + p[1][1];
}

PsiTensor::PsiTensor(const Field& field) : field_(field) {
  for (auto& row : a_) row.fill(field.zero());
}

PsiTensor PsiTensor::parse(std::string_view text, const Field& field) {
  PsiTensor psi(field);
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty() || text == "0") return psi;
  auto index = [](char ch) -> int {
    for (int k = 0; k < 3; ++k) {
      if (kNames[k] == ch) return k;
    }
    return -1;
  };
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view tok = trim(text.substr(start, comma - start));
    const std::size_t colon = tok.find(':');
    const std::string_view gens = trim(tok.substr(0, colon));
    if (gens.size() != 2 || index(gens[0]) < 0 || index(gens[1]) < 0) {
      throw ParseError("bad Psi token '" + std::string(tok) + "'", 1, start + 1);
    }
    Scalar c = field.one();
    if (colon != std::string_view::npos) {
      try {
        c = field.parse_scalar(trim(tok.substr(colon + 1)));
      } catch (const ParseError&) {
        throw ParseError("bad Psi coefficient in '" + std::string(tok) + "'", 1, start + 1);
      }
    }
    const auto i = static_cast<std::size_t>(index(gens[0]));
    const auto j = static_cast<std::size_t>(index(gens[1]));
    psi.a_[i][j] += c;
    start = comma + 1;
  }
  return psi;
}

std::string PsiTensor::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (a_[i][j].is_zero()) continue;
      if (!out.empty()) out += ",";
      out += std::string{kNames[i], kNames[j]} + ":" + a_[i][j].to_string();
    }
  }
  return out.empty() ? "0" : out;
}

bool PsiTensor::is_zero() const {
  for (const auto& row : a_) {
    for (const auto& x : row) {
      if (!x.is_zero()) return false;
    }
  }
  return true;
}

Mat4 PsiTensor::kronecker() const {
  Mat4 m = zero4(field_);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (a_[i][j].is_zero()) continue;
      m = add4(m, kron(SL2Element::basis(i, field_).matrix(), SL2Element::basis(j, field_).matrix()),
               a_[i][j]);
    }
  }
  return m;
}

SL2Element contract(const PsiTensor& psi, const SL2Element& v, Side side) {
  const Field& f = psi.field();
  SL2Element out = SL2Element::zero(f);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (psi.at(i, j).is_zero()) continue;
      if (side == Side::left) {
        out = out + SL2Element::basis(j, f) * (psi.at(i, j) * killing(SL2Element::basis(i, f), v));
      } else {
        out = out + SL2Element::basis(i, f) * (psi.at(i, j) * killing(SL2Element::basis(j, f), v));
      }
    }
  }
  return out;
}

Mat3 psi_dagger_psi(const PsiTensor& psi) {
  const Field& f = psi.field();
  Mat3 m;
  for (std::size_t k = 0; k < 3; ++k) {
    const SL2Element img =
        contract(psi, contract(psi, SL2Element::basis(k, f), Side::left), Side::right);
    for (std::size_t r = 0; r < 3; ++r) m[r][k] = img.c[r];
  }
  return m;
}

std::size_t stab_dim(const PsiTensor& psi) {
  const Field& f = psi.field();
  const Mat4 p = psi.kronecker();
  const Mat2 id = identity2(f);
  std::vector<SparseVector> cols;
  for (int side = 0; side < 2; ++side) {
    for (std::size_t k = 0; k < 3; ++k) {
      const Mat2 g = SL2Element::basis(k, f).matrix();
      // side 0: 1⊗u_1, side 1: u_2⊗1
      const Mat4 x = side == 0 ? kron(id, g) : kron(g, id);
      cols.push_back(flatten(add4(mul4(x, p), mul4(p, x), -f.one())));
    }
  }
  return nullity(16, f, std::move(cols));
}

std::size_t jj_dim(const PsiTensor& psi) {
  const Field& f = psi.field();
  const Mat3 m = psi_dagger_psi(psi);
  std::vector<SparseVector> cols(3);
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t r = 0; r < 3; ++r) {
      cols[k].set(r, r == k ? m[r][k] - f.from_int(4) : m[r][k]);
    }
  }
  return nullity(3, f, std::move(cols));
}

KernelModelReport kernel_model_dims(const PsiTensor& psi) {
  const Field& f = psi.field();
  const Mat4 one_psi = add4(identity4(f), psi.kronecker(), f.one());
  const Mat2 id = identity2(f);
  std::vector<SparseVector> cols;
  // c: f1 = c·1 contributes -(1⊗1)(1+Ψ)
  cols.push_back(flatten(add4(zero4(f), one_psi, -f.one())));
  for (int which = 1; which <= 4; ++which) {
    for (std::size_t k = 0; k < 3; ++k) {
      const Mat2 g = SL2Element::basis(k, f).matrix();
      Mat4 term = zero4(f);
      switch (which) {
        case 1: term = add4(term, mul4(kron(id, g), one_psi), -f.one()); break;
        case 2: term = mul4(one_psi, kron(g, id)); break;
        case 3: term = mul4(one_psi, kron(id, g)); break;
        default: term = add4(term, mul4(kron(g, id), one_psi), -f.one()); break;
      }
      cols.push_back(flatten(term));
    }
  }
  KernelModelReport r{nullity(16, f, std::move(cols)), stab_dim(psi), jj_dim(psi), 0};

  // unknowns (v1, v2) at offsets 0 and 3
  std::vector<SparseVector> vcols;
  const Scalar two = f.from_int(2);
  for (std::size_t k = 0; k < 3; ++k) {
    const SL2Element b = SL2Element::basis(k, f);
    SparseVector col = coords(b * (-two), 0);  // -2 v1 in the first equation
    col.axpy(f.one(), coords(contract(psi, b, Side::right), 3));
    vcols.push_back(std::move(col));
  }
  for (std::size_t k = 0; k < 3; ++k) {
    const SL2Element b = SL2Element::basis(k, f);
    SparseVector col = coords(contract(psi, b, Side::left), 0);
    col.axpy(f.one(), coords(b * (-two), 3));
    vcols.push_back(std::move(col));
  }
  r.v_system = nullity(6, f, std::move(vcols));

  if (r.total != r.stab + r.jj || r.v_system != r.jj) {
    throw ConsistencyError("kernel model gives " + std::to_string(r.total) + " but stab + J = " +
                           std::to_string(r.stab) + " + " + std::to_string(r.jj) +
                           " (v-system " + std::to_string(r.v_system) + ")");
  }
  return r;
}

PsiTensor orbit_conjugate(const PsiTensor& psi, const Mat2& g, const Mat2& h) {
  const Field& f = psi.field();
  auto adjoint = [&](const Mat2& m) {
    if (!(m[0][0] * m[1][1] - m[0][1] * m[1][0]).is_one()) {
      throw DomainError("conjugating matrix must have determinant 1");
    }
    const Mat2 inv = {{{m[1][1], -m[0][1]}, {-m[1][0], m[0][0]}}};
    Mat3 ad;
    for (std::size_t k = 0; k < 3; ++k) {
      const SL2Element img =
          SL2Element::from_matrix(mul2(mul2(m, SL2Element::basis(k, f).matrix()), inv));
      for (std::size_t r = 0; r < 3; ++r) ad[r][k] = img.c[r];
    }
    return ad;
  };
  const Mat3 ag = adjoint(g);
  const Mat3 ah = adjoint(h);
  PsiTensor out(f);
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t l = 0; l < 3; ++l) {
      Scalar s = f.zero();
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) s += psi.at(i, j) * ag[k][i] * ah[l][j];
      }
      out.set(k, l, s);
    }
  }
  return out;
}

}  // namespace hhcalc
