#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "ufsg/common.hpp"
#include "ufsg/rational.hpp"
#include "ufsg/semigroup_vector.hpp"

namespace ufsg {

// Ordered list of distinct elements; the order fixes matrix row/column indexing.
template <typename Element>
class TruncationBasis {
 public:
  explicit TruncationBasis(std::vector<Element> elements) : elements_(std::move(elements)) {
    for (std::size_t i = 0; i < elements_.size(); ++i)
      if (!index_.emplace(elements_[i], i).second)
        throw std::invalid_argument("duplicate basis element");
  }

  std::size_t size() const { return elements_.size(); }
  const Element& at(std::size_t i) const { return elements_.at(i); }
  const std::vector<Element>& elements() const { return elements_; }

  const std::size_t* index_of(const Element& s) const {
    const auto it = index_.find(s);
    return it == index_.end() ? nullptr : &it->second;
  }

 private:
  std::vector<Element> elements_;
  std::map<Element, std::size_t> index_;
};

// Dense square matrix of exact coefficients; entry (r, c) is the coefficient
// of basis[r] in f * delta_{basis[c]} (left) or delta_{basis[c]} * f (right).
class CompressedMatrix {
 public:
  explicit CompressedMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

  std::size_t dimension() const { return dim_; }

  const Coefficient& at(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
  void add(std::size_t r, std::size_t c, const Coefficient& value) {
    entries_[r * dim_ + c] += value;
  }

  std::vector<std::complex<double>> to_complex() const {
    std::vector<std::complex<double>> out;
    out.reserve(entries_.size());
    for (const Coefficient& e : entries_) out.push_back(e.to_complex());
    return out;
  }

 private:
  std::size_t dim_;
  std::vector<Coefficient> entries_;
};

// Compression P L_f P (or P R_f P) onto the span of the basis. Products that
// leave the basis are dropped, so the matrix norm is a lower bound for the
// operator norm.
template <typename Element>
CompressedMatrix compress_operator(const SemigroupVector<Element>& f,
                                   const TruncationBasis<Element>& basis, Side side) {
  CompressedMatrix out(basis.size());
  for (const auto& [u, value] : f.support()) {
    for (std::size_t c = 0; c < basis.size(); ++c) {
      const Element image = (side == Side::left) ? u * basis.at(c) : basis.at(c) * u;
      if (const std::size_t* r = basis.index_of(image)) out.add(*r, c, value);
    }
  }
  return out;
}

// Largest singular value by power iteration on the Gram form A^H A, started
// from the normalized all-ones vector so runs are reproducible. Successive
// Rayleigh estimates are nondecreasing, so the result is itself a lower
// bound; iteration stops once the Gram residual ||A^H A v - lambda v|| pins
// an eigenvalue within rel_tol * lambda (successive-difference tests stall on
// plateaus and stop too early).
inline double operator_norm_estimate(const CompressedMatrix& m, double rel_tol = 1e-10,
                                     std::size_t max_iter = 10000) {
  const std::size_t n = m.dimension();
  if (n == 0) throw std::invalid_argument("empty matrix");
  if (rel_tol <= 0) throw std::invalid_argument("rel_tol must be positive");
  const std::vector<std::complex<double>> a = m.to_complex();
  std::vector<std::complex<double>> v(n, std::complex<double>(1.0 / std::sqrt(double(n)), 0.0));
  std::vector<std::complex<double>> av(n), w(n);

  const auto norm2 = [](const std::vector<std::complex<double>>& x) {
    double s = 0;
    for (const auto& c : x) s += std::norm(c);
    return std::sqrt(s);
  };

  double sigma = 0;
  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    for (std::size_t r = 0; r < n; ++r) {
      std::complex<double> s = 0;
      for (std::size_t c = 0; c < n; ++c) s += a[r * n + c] * v[c];
      av[r] = s;
    }
    const double lambda = norm2(av) * norm2(av);
    sigma = std::sqrt(lambda);
    if (sigma == 0) return 0.0;
    for (std::size_t c = 0; c < n; ++c) {
      std::complex<double> s = 0;
      for (std::size_t r = 0; r < n; ++r) s += std::conj(a[r * n + c]) * av[r];
      w[c] = s;
    }
    double residual = 0;
    for (std::size_t c = 0; c < n; ++c) residual += std::norm(w[c] - lambda * v[c]);
    residual = std::sqrt(residual);
    const double wlen = norm2(w);
    if (wlen == 0) return sigma;
    for (std::size_t c = 0; c < n; ++c) v[c] = w[c] / wlen;
    if (residual <= rel_tol * lambda) return sigma;
  }
  return sigma;
}

}  // namespace ufsg
