// Copyright 2026 The symoracle Authors
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

#ifndef SYMORACLE_MATRIX_VERIFY_HPP
#define SYMORACLE_MATRIX_VERIFY_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "symoracle/class_function.hpp"
#include "symoracle/table_io.hpp"

namespace symoracle {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Tolerance for structural identities (homomorphism, idempotence, resolution of identity).
inline constexpr double kStructuralTolerance = 1e-10;
/// Tolerance when comparing simulated numbers to exact formula values.
inline constexpr double kComparisonTolerance = 1e-8;

/// One square matrix per group element, in the order of `elements()`.
template <typename Scalar>
class MatrixRep {
   public:
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

    MatrixRep(std::shared_ptr<const Group> group, std::shared_ptr<const ElementIndex> elements,
              std::vector<Matrix> matrices)
        : group_(std::move(group)), elements_(std::move(elements)), matrices_(std::move(matrices)) {
        if (matrices_.size() != elements_->size()) {
            throw ParameterError("one matrix per group element is required");
        }
    }

    const Group &group() const {
        return *group_;
    }
    std::shared_ptr<const Group> group_ptr() const {
        return group_;
    }
    const ElementIndex &elements() const {
        return *elements_;
    }
    std::shared_ptr<const ElementIndex> elements_ptr() const {
        return elements_;
    }
    Eigen::Index dimension() const {
        return matrices_.empty() ? 0 : matrices_.front().rows();
    }
    std::size_t size() const {
        return matrices_.size();
    }
    const Matrix &matrix(std::size_t i) const {
        return matrices_[i];
    }
    const Matrix &operator()(const Element &g) const {
        return matrices_[elements_->index_of(g)];
    }

    template <typename Other>
    MatrixRep<Other> cast() const {
        std::vector<typename MatrixRep<Other>::Matrix> out;
        out.reserve(matrices_.size());
        for (const auto &m : matrices_) {
            out.push_back(m.template cast<Other>());
        }
        return MatrixRep<Other>(group_, elements_, std::move(out));
    }

    /// First violation of rho(g) rho(h) = rho(gh) (all pairs up to |G| = 60, generator
    /// pairs beyond) or of unitarity; nullopt when both hold within `tolerance`.
    std::optional<std::string> check(double tolerance = kStructuralTolerance) const {
        const auto &els = elements_->elements();
        const std::size_t n = els.size();
        const auto gens = group_->generators();
        const Matrix id = Matrix::Identity(dimension(), dimension());
        for (std::size_t i = 0; i < n; ++i) {
            const auto &a = matrices_[i];
            double unitary = (a.adjoint() * a - id).cwiseAbs().maxCoeff();
            if (unitary > tolerance) {
                return "matrix of " + group_->format(els[i]) + " is not unitary";
            }
            auto pair_check = [&](const Element &h) -> std::optional<std::string> {
                const auto &b = (*this)(h);
                const auto &ab = (*this)(group_->multiply(els[i], h));
                if ((a * b - ab).cwiseAbs().maxCoeff() > tolerance) {
                    return "homomorphism fails at (" + group_->format(els[i]) + ", " + group_->format(h) + ")";
                }
                return std::nullopt;
            };
            if (n <= 60) {
                for (const auto &h : els) {
                    if (auto err = pair_check(h)) {
                        return err;
                    }
                }
            } else {
                for (const auto &h : gens) {
                    if (auto err = pair_check(h)) {
                        return err;
                    }
                }
            }
        }
        return std::nullopt;
    }

   private:
    std::shared_ptr<const Group> group_;
    std::shared_ptr<const ElementIndex> elements_;
    std::vector<Matrix> matrices_;
};

using PermutationRep = MatrixRep<int>;
using ComplexRep = MatrixRep<Complex>;

/// 0/1 matrices with rho(g) e_w = e_{g.w}. Requires |domain| <= 64 and |G| <= 2000.
PermutationRep matrices_from_action(const GroupAction &action);

/// rho^(x t) by Kronecker products; dimension capped at 256.
ComplexRep tensor_power(const ComplexRep &rep, int t);

/// Values of a table character on every element of `elements`, as complex numbers.
std::vector<Complex> character_on_elements(const CharacterTable &table, std::size_t chi,
                                           const ElementIndex &elements);

/// (chi(e) / |G|) sum_g conj(chi(g)) rho(g). Throws NumericalError if the result is not an
/// idempotent commuting with the representation.
ComplexMatrix isotypic_projector(const std::vector<Complex> &chi, const ComplexRep &rep);

/// Y of H induced to G over a left transversal, as block-monomial matrices.
struct InducedRep {
    ComplexRep rep;
    std::vector<Element> transversal;
    Eigen::Index block = 1;
    /// Projector onto the block of the identity coset.
    ComplexMatrix first_block;

    /// Index of the coset g H in the transversal.
    std::size_t coset_of(const Element &g) const;
    /// t E t^-1 for transversal entry i: the projector onto block i.
    ComplexMatrix coset_projector(std::size_t i) const;

    std::shared_ptr<const std::vector<std::size_t>> coset_index;  // per element of rep
};

/// Left transversal of H in G with the identity first (the image of H is given by the
/// embedding of every subgroup element).
std::vector<Element> left_transversal(const Group &group, const std::vector<Element> &subgroup_image);

/// Requires dim(Y) |G:H| <= 256. Throws ParameterError for an invalid transversal.
InducedRep build_induced(const ComplexRep &y, const Embedding &embedding, std::shared_ptr<const Group> group,
                         std::vector<Element> transversal);
InducedRep build_induced(const ComplexRep &y, const Embedding &embedding, std::shared_ptr<const Group> group);

/// 1x1 representation of H from a linear character of its table.
ComplexRep linear_rep(const CharacterTable &table, std::size_t chi);

/// Unitary matrix model of any irrep of H (|H| <= 64): a copy of it cut out of the left
/// regular representation. Throws NumericalError if the result has the wrong character.
ComplexRep irreducible_rep(const CharacterTable &table, std::size_t chi, std::uint64_t seed = 1);

struct Protocol {
    ComplexVector state;
    /// Projector onto the part of Y induced built from irreps of the query power.
    ComplexMatrix allowed;
    /// Dominant eigenvalue of allowed * E * allowed.
    double eigenvalue = 0;
    /// Largest distance of a nonzero eigenvalue from `eigenvalue`.
    double eigenvalue_spread = 0;
    double allowed_dimension = 0;
    double induced_dimension = 0;
    bool degenerate = false;
};

/// State from the dominant eigenvector of Pi E Pi, Pi = sum of isotypic projectors of the
/// listed G-irreps on Y induced.
Protocol optimal_protocol(const InducedRep &induced, const CharacterTable &group_table,
                          const IrrepSet &allowed_irreps);

struct Simulation {
    double value = 0;
    /// Rough floating error bound for the averaged sum.
    double error_bound = 0;
};

/// (1/|G|) sum_a || P_{coset of a} rho(a) psi ||^2, an exhaustive deterministic average.
Simulation simulate_success(const Protocol &protocol, const InducedRep &induced);

/// Largest <psi|E|psi> over `samples` random unit vectors in the allowed subspace.
double random_state_bound(const Protocol &protocol, const InducedRep &induced, int samples, std::uint64_t seed);

/// Irreps present in the t-th tensor power of a permutation representation, found from the
/// traces of numerical isotypic projectors.
IrrepSet numerical_power_support(const PermutationRep &rep, const TablePtr &table, int t);

struct YCheck {
    std::string label;
    double simulated = 0;
    double eigenvalue = 0;
    double expected_eigenvalue = 0;
    double random_max = 0;
    bool degenerate = false;
};

struct VerificationResult {
    std::string name;
    int t = 1;
    Rational formula;
    double simulated = 0;
    double delta = 0;
    bool pass = false;
    std::vector<YCheck> per_irrep;
    std::vector<std::string> failures;
};

/// Maximizes the simulated success over the irreps Y of H. The allowed G-irreps come
/// from `numerical_power_support` on the action's permutation matrices. Checks:
/// |simulated - formula| <= 1e-8, the eigenvalue equals dim V'/dim Y induced, random states
/// in V' never beat it, and the coset projectors resolve the identity.
VerificationResult verify_instance(const std::string &name, TablePtr group_table, TablePtr subgroup_table,
                                   const Embedding &embedding, const GroupAction &action, int t,
                                   const Rational &formula, std::uint64_t seed = 1);

Json verification_to_json(const VerificationResult &result);

}  // namespace symoracle

#endif
