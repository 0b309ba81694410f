// Copyright 2026 The pauliepr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pauliepr/matrix_oracle.hpp"

#include <algorithm>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "pauliepr/errors.hpp"

namespace pauliepr {

Eigen::Matrix2cd base_matrix(SiteLetter letter) {
    const Complex i(0, 1);
    Eigen::Matrix2cd m;
    switch (letter) {
        case SiteLetter::kOne:
            m << 1, 0, 0, 1;
            break;
        case SiteLetter::kE1:
            m << 0, 1, 1, 0;
            break;
        case SiteLetter::kE2:
            m << 0, -i, i, 0;
            break;
        case SiteLetter::kE3:
            m << 1, 0, 0, -1;
            break;
    }
    return m;
}

MatrixRep kronecker(const MatrixRep &a, const MatrixRep &b) {
    MatrixRep out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); r++) {
        for (Eigen::Index c = 0; c < a.cols(); c++) {
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
        }
    }
    return out;
}

MatrixRep identity_matrix(std::size_t arity) {
    auto dim = static_cast<Eigen::Index>(std::size_t{1} << arity);
    return MatrixRep::Identity(dim, dim);
}

MatrixRep word_matrix(const PauliWord &w) {
    MatrixRep out = base_matrix(w[0]);
    for (std::size_t k = 1; k < w.size(); k++) {
        out = kronecker(out, base_matrix(w[k]));
    }
    return out;
}

MatrixRep element_matrix(const Element &a) {
    auto dim = static_cast<Eigen::Index>(std::size_t{1} << a.arity());
    MatrixRep out = MatrixRep::Zero(dim, dim);
    for (const auto &[w, c] : a.terms()) {
        out += c.to_complex() * word_matrix(w);
    }
    return out;
}

double max_abs_difference(const MatrixRep &a, const MatrixRep &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatch("matrices are " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                " and " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    if (a.size() == 0) {
        return 0.0;
    }
    return (a - b).cwiseAbs().maxCoeff();
}

bool approx_equal(const MatrixRep &a, const MatrixRep &b, double tol) {
    return max_abs_difference(a, b) <= tol;
}

bool approx_zero(const MatrixRep &a, double tol) {
    return a.size() == 0 || a.cwiseAbs().maxCoeff() <= tol;
}

Complex normalized_trace(const MatrixRep &a) {
    return a.trace() / static_cast<double>(a.rows());
}

std::vector<double> hermitian_spectrum(const MatrixRep &a) {
    Eigen::SelfAdjointEigenSolver<MatrixRep> solver(a, Eigen::EigenvaluesOnly);
    const auto &values = solver.eigenvalues();
    std::vector<double> out(values.data(), values.data() + values.size());
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t numerical_rank(const MatrixRep &a, double tol) {
    Eigen::JacobiSVD<MatrixRep> svd(a);
    const auto &s = svd.singularValues();
    return static_cast<std::size_t>((s.array() > tol).count());
}

MatrixRep oracle_singlet_psi() {
    const MatrixRep one = identity_matrix(2);
    MatrixRep psi = one;
    for (int k = 1; k <= 3; k++) {
        MatrixRep ekk = word_matrix(PauliWord::from_indices({k, k}));
        psi = psi * ((ekk - one) / 2.0);
    }
    return psi;
}

}  // namespace pauliepr
