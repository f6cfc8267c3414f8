#pragma once

#include <cstddef>
#include <vector>

#include "bsdw/types.hpp"

namespace bsdw {

// dimension cap for dense operators; default 4096
std::size_t max_dim();
void set_max_dim(std::size_t cap);
void check_capacity(std::size_t dim, const char* who);

struct HermitianOperator {
  int m = 1;
  int local_dim = 1;
  CMat matrix;

  Eigen::Index dim() const { return matrix.rows(); }
};

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
  double min_eigenvalue = 0.0;
};

// local factors of a tensor-product operator X_1 (x) ... (x) X_m
using TensorTerm = std::vector<CMat>;

CMat kron(const CMat& a, const CMat& b);
HermitianOperator tensor_power(const CMat& a, int m);
HermitianOperator tensor_product(const TensorTerm& factors);

// target += c * (X_1 (x) ... (x) X_m), skipping zero entries of the factors
void add_tensor_term(CMat& target, cplx c, const TensorTerm& factors);

HermitianOperator assemble(const std::vector<double>& coeffs, const std::vector<HermitianOperator>& ops);
HermitianOperator assemble_terms(const std::vector<double>& coeffs, const std::vector<TensorTerm>& terms);

CMat partial_transpose(const CMat& op, int local_dim, int m, int subsystem);
HermitianOperator partial_transpose(const HermitianOperator& op, int subsystem);

bool is_hermitian(const CMat& a, double rel_tol = 1e-12);
Spectrum spectrum(const CMat& a);
Spectrum spectrum(const HermitianOperator& op);

std::vector<double> closed_form_spectrum_kind1(const std::vector<double>& a, int m, int d);
std::vector<double> closed_form_spectrum_kind2(const std::vector<double>& a, int m, int d);

double expectation(const CMat& op, const CMat& rho);
double expectation_vec(const CMat& op, const CVec& psi);
double expectation(const HermitianOperator& op, const CMat& rho);

cplx hs_inner(const CMat& a, const CMat& b);
double hs_norm(const CMat& a);

// sorted pairwise comparison
bool multiset_equal(std::vector<double> a, std::vector<double> b, double tol);
double multiset_distance(std::vector<double> a, std::vector<double> b);

}  // namespace bsdw
