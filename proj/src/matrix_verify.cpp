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

#include "symoracle/matrix_verify.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>
#include <unordered_map>
#include <unsupported/Eigen/KroneckerProduct>

namespace symoracle {

namespace {

constexpr Eigen::Index kMaxDimension = 256;

std::shared_ptr<const ElementIndex> index_for(const std::shared_ptr<const Group> &group) {
    return std::make_shared<ElementIndex>(*group, enumerate(*group));
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

}  // namespace

PermutationRep matrices_from_action(const GroupAction &action) {
    const auto n = static_cast<Eigen::Index>(action.domain_size());
    if (n > 64 || action.group().order() > 2000) {
        throw SizeError("permutation matrices need |domain| <= 64 and |G| <= 2000");
    }
    auto index = index_for(action.group_ptr());
    std::vector<PermutationRep::Matrix> mats;
    mats.reserve(index->size());
    for (const auto &g : index->elements()) {
        PermutationRep::Matrix m = PermutationRep::Matrix::Zero(n, n);
        for (Eigen::Index w = 0; w < n; ++w) {
            m(static_cast<Eigen::Index>(action.act(g, static_cast<std::size_t>(w))), w) = 1;
        }
        mats.push_back(std::move(m));
    }
    return PermutationRep(action.group_ptr(), std::move(index), std::move(mats));
}

ComplexRep tensor_power(const ComplexRep &rep, int t) {
    if (t < 1) {
        throw ParameterError("tensor power needs t >= 1");
    }
    double dim = std::pow(static_cast<double>(rep.dimension()), t);
    if (dim > static_cast<double>(kMaxDimension)) {
        throw SizeError("tensor power dimension " + fmt(dim) + " exceeds 256");
    }
    std::vector<ComplexMatrix> mats;
    for (std::size_t i = 0; i < rep.size(); ++i) {
        ComplexMatrix m = rep.matrix(i);
        for (int s = 1; s < t; ++s) {
            ComplexMatrix next = Eigen::kroneckerProduct(m, rep.matrix(i)).eval();
            m = std::move(next);
        }
        mats.push_back(std::move(m));
    }
    return ComplexRep(rep.group_ptr(), rep.elements_ptr(), std::move(mats));
}

std::vector<Complex> character_on_elements(const CharacterTable &table, std::size_t chi,
                                           const ElementIndex &elements) {
    const auto &cc = table.require_conjugacy();
    std::vector<Complex> out;
    out.reserve(elements.size());
    for (const auto &g : elements.elements()) {
        out.push_back(table[chi].values[cc.class_of(g)].to_complex());
    }
    return out;
}

ComplexMatrix isotypic_projector(const std::vector<Complex> &chi, const ComplexRep &rep) {
    const Eigen::Index d = rep.dimension();
    ComplexMatrix p = ComplexMatrix::Zero(d, d);
    for (std::size_t i = 0; i < rep.size(); ++i) {
        p += std::conj(chi[i]) * rep.matrix(i);
    }
    p *= chi.front() / static_cast<double>(rep.size());
    if ((p * p - p).cwiseAbs().maxCoeff() > kStructuralTolerance) {
        throw NumericalError("isotypic projector is not idempotent");
    }
    for (const auto &g : rep.group().generators()) {
        const auto &m = rep(g);
        if ((m * p - p * m).cwiseAbs().maxCoeff() > kStructuralTolerance) {
            throw NumericalError("isotypic projector does not commute with the representation");
        }
    }
    return p;
}

// ---------------------------------------------------------------------------------------

std::size_t InducedRep::coset_of(const Element &g) const {
    return (*coset_index)[rep.elements().index_of(g)];
}

ComplexMatrix InducedRep::coset_projector(std::size_t i) const {
    const Eigen::Index d = rep.dimension();
    ComplexMatrix p = ComplexMatrix::Zero(d, d);
    p.block(static_cast<Eigen::Index>(i) * block, static_cast<Eigen::Index>(i) * block, block, block).setIdentity();
    return p;
}

std::vector<Element> left_transversal(const Group &group, const std::vector<Element> &subgroup_image) {
    std::unordered_map<std::uint64_t, bool> covered;
    std::vector<Element> out;
    for (const auto &g : enumerate(group)) {
        if (covered.count(group.key(g))) {
            continue;
        }
        out.push_back(g);
        for (const auto &h : subgroup_image) {
            covered[group.key(group.multiply(g, h))] = true;
        }
    }
    return out;
}

InducedRep build_induced(const ComplexRep &y, const Embedding &embedding, std::shared_ptr<const Group> group,
                         std::vector<Element> transversal) {
    const Group &g = *group;
    const auto &h_elements = y.elements().elements();
    const std::size_t k = transversal.size();
    const Eigen::Index block = y.dimension();
    if (static_cast<std::uint64_t>(k) * h_elements.size() != g.order()) {
        throw ParameterError("transversal size times |H| differs from |G|");
    }
    if (static_cast<Eigen::Index>(k) * block > kMaxDimension) {
        throw SizeError("induced dimension exceeds 256");
    }
    if (transversal.empty() || transversal.front() != g.identity()) {
        throw ParameterError("transversal must start with the identity");
    }
    auto index = index_for(group);
    // For every x in G: x = t_i h, recorded as (i, index of h).
    std::vector<std::size_t> coset(index->size(), k);
    std::vector<std::size_t> part(index->size(), 0);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t hi = 0; hi < h_elements.size(); ++hi) {
            auto x = index->index_of(g.multiply(transversal[i], embedding(h_elements[hi])));
            if (coset[x] != k) {
                throw ParameterError("transversal elements " + g.format(transversal[coset[x]]) + " and " +
                                     g.format(transversal[i]) + " share a coset");
            }
            coset[x] = i;
            part[x] = hi;
        }
    }
    std::vector<ComplexMatrix> mats;
    mats.reserve(index->size());
    const Eigen::Index dim = static_cast<Eigen::Index>(k) * block;
    for (const auto &x : index->elements()) {
        ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
        for (std::size_t j = 0; j < k; ++j) {
            auto target = index->index_of(g.multiply(x, transversal[j]));
            auto i = static_cast<Eigen::Index>(coset[target]);
            m.block(i * block, static_cast<Eigen::Index>(j) * block, block, block) = y.matrix(part[target]);
        }
        mats.push_back(std::move(m));
    }
    InducedRep out{ComplexRep(std::move(group), index, std::move(mats)), std::move(transversal), block,
                   ComplexMatrix::Zero(dim, dim), nullptr};
    out.first_block.topLeftCorner(block, block).setIdentity();
    out.coset_index = std::make_shared<const std::vector<std::size_t>>(std::move(coset));
    return out;
}

InducedRep build_induced(const ComplexRep &y, const Embedding &embedding, std::shared_ptr<const Group> group) {
    std::vector<Element> image;
    for (const auto &h : y.elements().elements()) {
        image.push_back(embedding(h));
    }
    auto transversal = left_transversal(*group, image);
    return build_induced(y, embedding, std::move(group), std::move(transversal));
}

ComplexRep linear_rep(const CharacterTable &table, std::size_t chi) {
    if (table[chi].degree() != 1) {
        throw UnsupportedError("only linear characters have built-in matrix models");
    }
    auto group = table.require_conjugacy().group_ptr();
    auto index = index_for(group);
    std::vector<ComplexMatrix> mats;
    for (const auto &v : character_on_elements(table, chi, *index)) {
        mats.push_back(ComplexMatrix::Constant(1, 1, v));
    }
    return ComplexRep(std::move(group), std::move(index), std::move(mats));
}

ComplexRep irreducible_rep(const CharacterTable &table, std::size_t chi, std::uint64_t seed) {
    if (table[chi].degree() == 1) {
        return linear_rep(table, chi);
    }
    auto group = table.require_conjugacy().group_ptr();
    auto index = index_for(group);
    const auto &els = index->elements();
    const auto n = static_cast<Eigen::Index>(els.size());
    if (n > 64) {
        throw SizeError("matrix models of non-linear irreps need |H| <= 64");
    }
    // Left and right regular representations; they commute.
    std::vector<ComplexMatrix> left;
    std::vector<ComplexMatrix> right;
    for (const auto &h : els) {
        ComplexMatrix l = ComplexMatrix::Zero(n, n);
        ComplexMatrix r = ComplexMatrix::Zero(n, n);
        const Element h_inv = group->inverse(h);
        for (Eigen::Index w = 0; w < n; ++w) {
            const auto &x = els[static_cast<std::size_t>(w)];
            l(static_cast<Eigen::Index>(index->index_of(group->multiply(h, x))), w) = 1;
            r(static_cast<Eigen::Index>(index->index_of(group->multiply(x, h_inv))), w) = 1;
        }
        left.push_back(std::move(l));
        right.push_back(std::move(r));
    }
    ComplexRep regular(group, index, left);
    const auto values = character_on_elements(table, chi, *index);
    ComplexMatrix projector = isotypic_projector(values, regular);

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> proj_solver(projector);
    const Eigen::Index d = table[chi].degree();
    const Eigen::Index block = d * d;
    // Eigenvalues ascend, so the range of the projector is the last d^2 columns.
    ComplexMatrix basis = proj_solver.eigenvectors().rightCols(block);

    // A random Hermitian element of the right-regular algebra acts on the isotypic block as
    // identity (x) B for a d x d Hermitian B; an eigenspace of B picks one copy of the irrep.
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    for (int attempt = 0; attempt < 8; ++attempt) {
        ComplexMatrix a = ComplexMatrix::Zero(n, n);
        for (std::size_t i = 0; i < right.size(); ++i) {
            a += Complex(normal(rng), normal(rng)) * right[i];
        }
        a = (a + a.adjoint()).eval();
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(basis.adjoint() * a * basis);
        const auto &ev = solver.eigenvalues();
        bool clustered = ev(d - 1) - ev(0) < 1e-7 && (block == d || ev(d) - ev(d - 1) > 1e-4);
        if (!clustered) {
            continue;
        }
        ComplexMatrix q = basis * solver.eigenvectors().leftCols(d);
        std::vector<ComplexMatrix> mats;
        for (const auto &l : left) {
            mats.push_back(q.adjoint() * l * q);
        }
        ComplexRep rep(group, index, std::move(mats));
        for (std::size_t i = 0; i < els.size(); ++i) {
            if (std::abs(rep.matrix(i).trace() - values[i]) > kStructuralTolerance * static_cast<double>(n)) {
                throw NumericalError("matrix model of " + table[chi].label + " has the wrong character");
            }
        }
        if (auto err = rep.check()) {
            throw NumericalError("matrix model of " + table[chi].label + ": " + *err);
        }
        return rep;
    }
    throw NumericalError("could not split the isotypic block of " + table[chi].label);
}

// ---------------------------------------------------------------------------------------

Protocol optimal_protocol(const InducedRep &induced, const CharacterTable &group_table,
                          const IrrepSet &allowed_irreps) {
    const Eigen::Index d = induced.rep.dimension();
    Protocol out;
    out.allowed = ComplexMatrix::Zero(d, d);
    for (auto chi : allowed_irreps.indices()) {
        out.allowed += isotypic_projector(character_on_elements(group_table, chi, induced.rep.elements()), induced.rep);
    }
    out.allowed_dimension = out.allowed.trace().real();
    out.induced_dimension = static_cast<double>(d);
    ComplexMatrix m = out.allowed * induced.first_block * out.allowed;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
    const auto &values = solver.eigenvalues();
    out.eigenvalue = values(d - 1);
    // Rank detection below 1e-6 is treated as zero.
    if (out.eigenvalue < 1e-6) {
        out.degenerate = true;
        out.state = ComplexVector::Unit(d, 0);
        return out;
    }
    for (Eigen::Index i = 0; i < d; ++i) {
        if (values(i) > 1e-6) {
            out.eigenvalue_spread = std::max(out.eigenvalue_spread, std::abs(values(i) - out.eigenvalue));
        }
    }
    out.state = solver.eigenvectors().col(d - 1).normalized();
    return out;
}

Simulation simulate_success(const Protocol &protocol, const InducedRep &induced) {
    const auto &rep = induced.rep;
    double total = 0;
    for (std::size_t a = 0; a < rep.size(); ++a) {
        ComplexVector moved = rep.matrix(a) * protocol.state;
        auto c = static_cast<Eigen::Index>((*induced.coset_index)[a]);
        total += moved.segment(c * induced.block, induced.block).squaredNorm();
    }
    Simulation out;
    out.value = total / static_cast<double>(rep.size());
    out.error_bound = 1e-15 * static_cast<double>(rep.dimension() * rep.dimension());
    return out;
}

double random_state_bound(const Protocol &protocol, const InducedRep &induced, int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    const Eigen::Index d = induced.rep.dimension();
    double best = 0;
    for (int s = 0; s < samples; ++s) {
        ComplexVector v(d);
        for (Eigen::Index i = 0; i < d; ++i) {
            v(i) = Complex(normal(rng), normal(rng));
        }
        ComplexVector psi = protocol.allowed * v;
        if (psi.norm() < 1e-9) {
            continue;
        }
        psi.normalize();
        best = std::max(best, psi.dot(induced.first_block * psi).real());
    }
    return best;
}

IrrepSet numerical_power_support(const PermutationRep &rep, const TablePtr &table, int t) {
    ComplexRep power = tensor_power(rep.cast<Complex>(), t);
    IrrepSet out(table);
    for (std::size_t chi = 0; chi < table->size(); ++chi) {
        // Trace = multiplicity * degree.
        double trace = isotypic_projector(character_on_elements(*table, chi, power.elements()), power).trace().real();
        if (trace > 0.5) {
            out.insert(chi);
        }
    }
    return out;
}

VerificationResult verify_instance(const std::string &name, TablePtr group_table, TablePtr subgroup_table,
                                   const Embedding &embedding, const GroupAction &action, int t,
                                   const Rational &formula, std::uint64_t seed) {
    VerificationResult out;
    out.name = name;
    out.t = t;
    out.formula = formula;
    auto perm = matrices_from_action(action);
    if (auto err = perm.check()) {
        out.failures.push_back("permutation matrices: " + *err);
    }
    const IrrepSet allowed = numerical_power_support(perm, group_table, t);
    auto group = group_table->require_conjugacy().group_ptr();
    double best = -1;
    for (std::size_t y = 0; y < subgroup_table->size(); ++y) {
        InducedRep induced = build_induced(irreducible_rep(*subgroup_table, y, seed + y), embedding, group);
        const Eigen::Index d = induced.rep.dimension();
        ComplexMatrix resolution = ComplexMatrix::Zero(d, d);
        for (std::size_t i = 0; i < induced.transversal.size(); ++i) {
            resolution += induced.rep(induced.transversal[i]) * induced.first_block *
                          induced.rep(induced.transversal[i]).adjoint();
        }
        if ((resolution - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff() > kStructuralTolerance) {
            out.failures.push_back("coset projectors do not sum to the identity for " + (*subgroup_table)[y].label);
        }
        if (auto err = induced.rep.check()) {
            out.failures.push_back("induced representation: " + *err);
        }
        Protocol protocol = optimal_protocol(induced, *group_table, allowed);
        YCheck check;
        check.label = (*subgroup_table)[y].label;
        check.degenerate = protocol.degenerate;
        check.expected_eigenvalue = protocol.allowed_dimension / protocol.induced_dimension;
        if (!protocol.degenerate) {
            check.simulated = simulate_success(protocol, induced).value;
            check.eigenvalue = protocol.eigenvalue;
            check.random_max = random_state_bound(protocol, induced, 100, seed + y);
            if (std::abs(check.eigenvalue - check.expected_eigenvalue) > kComparisonTolerance ||
                protocol.eigenvalue_spread > kComparisonTolerance) {
                out.failures.push_back("eigenvalue for " + check.label + " is " + fmt(check.eigenvalue) +
                                       ", expected " + fmt(check.expected_eigenvalue));
            }
            if (check.random_max > check.eigenvalue + kComparisonTolerance) {
                out.failures.push_back("a random state beats the protocol for " + check.label);
            }
        }
        best = std::max(best, check.simulated);
        out.per_irrep.push_back(std::move(check));
    }
    out.simulated = best;
    out.delta = std::abs(best - formula.get_d());
    if (out.delta > kComparisonTolerance) {
        out.failures.push_back("simulated " + fmt(best) + " differs from the formula " + to_string(formula));
    }
    out.pass = out.failures.empty();
    return out;
}

Json verification_to_json(const VerificationResult &result) {
    Json doc;
    doc["name"] = result.name;
    doc["t"] = result.t;
    doc["formula"] = to_string(result.formula);
    doc["simulated"] = result.simulated;
    doc["delta"] = result.delta;
    doc["pass"] = result.pass;
    doc["irreps"] = Json::array();
    for (const auto &c : result.per_irrep) {
        doc["irreps"].push_back({{"label", c.label},
                                 {"simulated", c.simulated},
                                 {"eigenvalue", c.eigenvalue},
                                 {"expected_eigenvalue", c.expected_eigenvalue},
                                 {"random_max", c.random_max},
                                 {"degenerate", c.degenerate}});
    }
    doc["failures"] = result.failures;
    return doc;
}

}  // namespace symoracle
