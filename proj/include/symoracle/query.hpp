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

#ifndef SYMORACLE_QUERY_HPP
#define SYMORACLE_QUERY_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "symoracle/class_function.hpp"
#include "symoracle/table_io.hpp"

namespace symoracle {

// ---------------------------------------------------------------------------
// Generic formulas over character tables.

/// Sum of squared degrees over the set.
Rational degree_square_sum(const IrrepSet &set);

/// Optimal single-shot success for identifying a hidden element when the t-query state
/// spans the irreps in `support`: sum of squared degrees over |G|.
Rational sod_success(const IrrepSet &support);
Rational sod_success(const ClassFunction &v, int t);

struct CosetResult {
    Rational probability;
    /// Indices into the subgroup table of every maximizing irrep, in label order.
    std::vector<std::size_t> maximizers;
};

/// Precomputed induction data for one subgroup H <= G: the multiplicity of every G-irrep in
/// every induced H-irrep (by reciprocity, from restrictions).
class CosetEngine {
   public:
    CosetEngine(TablePtr group_table, TablePtr subgroup_table, ClassFusion fusion);

    const CharacterTable &group_table() const {
        return *group_table_;
    }
    const CharacterTable &subgroup_table() const {
        return *subgroup_table_;
    }
    const ClassFusion &fusion() const {
        return fusion_;
    }
    /// (chi restricted to H, Y).
    std::int64_t multiplicity(std::size_t chi, std::size_t y) const {
        return mults_[chi][y];
    }
    /// Irreps of G appearing in Y induced.
    const IrrepSet &induced_support(std::size_t y) const {
        return induced_support_[y];
    }

    /// max over Y of dim(Y induced restricted to `support`) / dim(Y induced).
    CosetResult success(const IrrepSet &support) const;
    /// Some Y has every constituent of Y induced inside `support`.
    bool zero_error(const IrrepSet &support) const;

   private:
    TablePtr group_table_;
    TablePtr subgroup_table_;
    ClassFusion fusion_;
    std::vector<std::vector<std::int64_t>> mults_;
    std::vector<IrrepSet> induced_support_;
    std::vector<std::size_t> label_order_;
};

/// Abelian H <= G: (1/|G:H|) max over chi in `support` of the number of chi' in `support`
/// whose restriction to H equals that of chi. Computed from restricted values directly.
Rational abelian_coset_success(const CharacterTable &group_table, const ClassFusion &fusion,
                               const IrrepSet &support);

/// Least t in the trace meeting `pred`, scanning through the periodic tail; nullopt means
/// no power ever meets it.
template <typename Pred>
std::optional<int> first_power_where(const PowerTrace &trace, Pred pred) {
    for (std::size_t i = 0; i < trace.sets.size(); ++i) {
        if (pred(trace.sets[i])) {
            return static_cast<int>(i) + 1;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Symmetric and alternating groups through partition data only.

/// Largest degree on the partition path (n! must fit in 64 bits).
inline constexpr int kPartitionDegreeCap = 20;

/// Supports of the powers of the natural S_n representation, by iterating the add-then-
/// remove-a-box rule from {[n]}. Entry t - 1 is the support of the t-th power. Throws
/// SizeError above kPartitionDegreeCap.
std::vector<std::set<Partition>> symmetric_power_supports(int n, int t_max);

/// Sum of dim(lambda)^2 over the set.
Rational partition_degree_square_sum(const std::set<Partition> &set);

struct AlternatingSuccess {
    Rational symmetric;    // success for S_n on the same power
    Rational alternating;  // success for A_n
};

/// Identification success for S_n and A_n under the t-th power of the natural
/// representation. A_n irreps come from restricting S_n irreps: a non-self-conjugate pair
/// restricts to one irrep of degree dim(lambda), a self-conjugate lambda to two halves.
/// Requires n >= 4.
AlternatingSuccess alternating_sod_success(int n, int t);

/// Parity of a hidden permutation (coset of A_n in S_n), natural representation: 1 if the
/// t-th power support holds a self-conjugate partition or a conjugate pair, 1/2 otherwise.
CosetResult sign_coset_success(int n, int t, std::vector<std::string> *maximizer_labels = nullptr);

// ---------------------------------------------------------------------------
// Classical baseline.

/// Length of the shortest point tuple whose pointwise stabilizer is trivial. Throws
/// ParameterError for unfaithful actions, SizeError when the search exceeds its budget.
int classical_base_size(const GroupAction &action);

// ---------------------------------------------------------------------------
// Problem specifications and reports.

enum class Mode { sod, coset };

std::string to_string(Mode mode);
Mode parse_mode(const std::string &text);

struct ProblemSpec {
    GroupSpec group = GroupSpec::symmetric(3);
    /// "natural", "regular", or a sum of irreducible labels such as "[4] + 2[3,1]".
    std::string representation = "natural";
    /// Explicit character values (one per class, in table order); overrides
    /// `representation` when present.
    std::optional<std::vector<std::string>> character_values;
    /// Character table file for groups without a built-in table.
    std::optional<std::string> table_file;

    Mode mode = Mode::sod;
    /// Named subgroup: klein4, alternating, center, zero-sum, a3, trivial.
    std::string subgroup;
    /// Arbitrary subgroup: its spec plus the images of its generators.
    std::optional<GroupSpec> subgroup_group;
    std::vector<Element> generator_images;
    std::optional<std::string> subgroup_table_file;

    Rational threshold = Rational(2, 3);
};

Json problem_spec_to_json(const ProblemSpec &spec);
ProblemSpec problem_spec_from_json(const Json &doc);

/// The subgroup named by `spec.subgroup` inside `spec.group`; throws ParameterError when
/// the name is unknown or does not fit the group.
NamedSubgroup named_subgroup(const ProblemSpec &spec);

/// Extends generator images to a homomorphism H -> G by breadth-first search over H.
/// Inconsistent images surface later as EmbeddingError from ClassFusion::build.
Embedding embedding_from_generators(const Group &subgroup, const Group &group,
                                    const std::vector<Element> &images);

struct StepResult {
    int t = 1;
    Rational probability;
    /// Coset mode: labels of the maximizing subgroup irreps.
    std::vector<std::string> maximizers;
    /// Labels of the irreps in the support of the t-th power.
    std::vector<std::string> support;
    bool zero_error = false;

    friend bool operator==(const StepResult &, const StepResult &) = default;
};

struct QueryReport {
    std::string group;
    std::string subgroup;
    std::string representation;
    Mode mode = Mode::sod;
    Rational threshold = Rational(2, 3);
    std::vector<StepResult> steps;

    /// nullopt means infinite; `gamma_witness` then lists the repeating supports.
    std::optional<int> gamma;
    std::optional<int> gamma_bounded;
    std::vector<std::string> gamma_witness;
    std::string trace_status;
    int cycle_start = 0;
    int period = 0;

    std::optional<int> base_size;
    /// How each quantity was computed.
    std::vector<std::string> provenance;

    friend bool operator==(const QueryReport &, const QueryReport &) = default;
};

Json report_to_json(const QueryReport &report);
QueryReport report_from_json(const Json &doc);
/// Plain-text rendering; rationals appear as in the JSON form.
std::string report_to_text(const QueryReport &report);

/// Evaluates t = t_from..t_to and both complexities. S_n uses the partition path above
/// degree 7 and A_n always does unless a table file is supplied; the alternating subgroup
/// of S_n likewise takes the partition path. `with_base_size` adds the classical baseline
/// for action representations.
QueryReport solve(const ProblemSpec &spec, int t_from, int t_to, bool with_base_size = true);

}  // namespace symoracle

#endif
