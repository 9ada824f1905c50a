#pragma once

#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "qsv/state.hpp"

// Brute-force reference route: every op becomes an explicit 2^n x 2^n matrix
// built from its definition (not from the stride kernels), and a circuit is
// the product of those matrices. Slow on purpose; capped at 10 qubits.

namespace qsv {

struct Matrix {
  std::size_t dim = 0;
  std::vector<Amplitude> e;  // row-major

  Amplitude& at(std::size_t r, std::size_t c) { return e[r * dim + c]; }
  const Amplitude& at(std::size_t r, std::size_t c) const { return e[r * dim + c]; }

  static Matrix zero(std::size_t dim) {
    Matrix m;
    m.dim = dim;
    m.e.assign(dim * dim, Amplitude{0.0, 0.0});
    return m;
  }

  static Matrix identity(std::size_t dim) {
    Matrix m = zero(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
  }
};

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.dim != b.dim) throw std::invalid_argument("matrix dimension mismatch");
  Matrix out = Matrix::zero(a.dim);
  for (std::size_t r = 0; r < a.dim; ++r)
    for (std::size_t k = 0; k < a.dim; ++k) {
      const Amplitude ark = a.at(r, k);
      if (ark == Amplitude{}) continue;
      for (std::size_t c = 0; c < a.dim; ++c) out.at(r, c) += ark * b.at(k, c);
    }
  return out;
}

inline Matrix adjoint(const Matrix& m) {
  Matrix out = Matrix::zero(m.dim);
  for (std::size_t r = 0; r < m.dim; ++r)
    for (std::size_t c = 0; c < m.dim; ++c) out.at(c, r) = std::conj(m.at(r, c));
  return out;
}

inline StateVector apply_matrix(const Matrix& m, const StateVector& s) {
  if (m.dim != s.amplitudes.size()) throw std::invalid_argument("matrix/state dimension mismatch");
  StateVector out;
  out.num_qubits = s.num_qubits;
  out.amplitudes.assign(m.dim, Amplitude{0.0, 0.0});
  for (std::size_t r = 0; r < m.dim; ++r)
    for (std::size_t c = 0; c < m.dim; ++c) out.amplitudes[r] += m.at(r, c) * s.amplitudes[c];
  return out;
}

inline Matrix op_matrix(const GateOp& op, int num_qubits) {
  validate_op(op, num_qubits);
  const std::size_t dim = dim_of(num_qubits);
  Matrix m = Matrix::zero(dim);
  auto mask_of = [&](int q) { return std::size_t{1} << bit_shift(num_qubits, q); };
  switch (op.kind) {
    case GateOp::Kind::H: {
      const std::size_t mk = mask_of(op.qubits[0]);
      const double r = 1.0 / std::numbers::sqrt2;
      for (std::size_t row = 0; row < dim; ++row)
        for (std::size_t col = 0; col < dim; ++col) {
          if ((row & ~mk) != (col & ~mk)) continue;
          m.at(row, col) = ((row & mk) && (col & mk)) ? -r : r;
        }
      break;
    }
    case GateOp::Kind::X: {
      const std::size_t mk = mask_of(op.qubits[0]);
      for (std::size_t col = 0; col < dim; ++col) m.at(col ^ mk, col) = 1.0;
      break;
    }
    case GateOp::Kind::Z: {
      const std::size_t mk = mask_of(op.qubits[0]);
      for (std::size_t col = 0; col < dim; ++col) m.at(col, col) = (col & mk) ? -1.0 : 1.0;
      break;
    }
    case GateOp::Kind::MCZ: {
      std::size_t all = 0;
      for (int q : op.qubits) all |= mask_of(q);
      for (std::size_t col = 0; col < dim; ++col) m.at(col, col) = ((col & all) == all) ? -1.0 : 1.0;
      break;
    }
    case GateOp::Kind::Swap: {
      const std::size_t ma = mask_of(op.qubits[0]), mb = mask_of(op.qubits[1]);
      for (std::size_t col = 0; col < dim; ++col) {
        std::size_t row = col;
        const bool ba = col & ma, bb = col & mb;
        if (ba != bb) row = col ^ ma ^ mb;
        m.at(row, col) = 1.0;
      }
      break;
    }
    case GateOp::Kind::CSwap: {
      const std::size_t mc = mask_of(op.qubits[0]);
      const std::size_t ma = mask_of(op.qubits[1]), mb = mask_of(op.qubits[2]);
      for (std::size_t col = 0; col < dim; ++col) {
        std::size_t row = col;
        const bool ba = col & ma, bb = col & mb;
        if ((col & mc) && ba != bb) row = col ^ ma ^ mb;
        m.at(row, col) = 1.0;
      }
      break;
    }
  }
  return m;
}

inline Matrix dense_matrix(const Circuit& c) {
  if (c.num_qubits > 10) throw std::invalid_argument("dense matrix capped at 10 qubits");
  if (c.num_qubits < 1) throw std::invalid_argument("circuit has no qubits");
  Matrix total = Matrix::identity(dim_of(c.num_qubits));
  for (const auto& op : c.ops) total = multiply(op_matrix(op, c.num_qubits), total);
  return total;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.dim != b.dim) throw std::invalid_argument("matrix dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.e.size(); ++i)
    worst = std::max(worst, std::abs(a.e[i] - b.e[i]));
  return worst;
}

inline bool is_unitary(const Matrix& m, double tol = 1e-10) {
  return max_abs_diff(multiply(adjoint(m), m), Matrix::identity(m.dim)) <= tol;
}

}  // namespace qsv
