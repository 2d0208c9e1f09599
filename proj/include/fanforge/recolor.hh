#ifndef FANFORGE_GUARD_RECOLOR_HH
#define FANFORGE_GUARD_RECOLOR_HH 1

#include <fanforge/coloring.hh>
#include <fanforge/facts.hh>
#include <fanforge/fan.hh>
#include <fanforge/verdict.hh>

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace fanforge
{
    enum class TauType
    {
        a,
        b,
        c
    };

    auto to_string(TauType t) -> std::string;

    // The tau-sequence (v_1, ..., v_t) at the center of a typical multifan F
    // for a color tau not missing on F. For type B, terminal_color is the
    // missing color of v_t; for type C, terminal_index is the i in [2, t-1]
    // with the missing color of v_t equal to that of v_{i-1}.
    struct TauSequence
    {
        int tau = 0;
        std::vector<int> vertices;
        TauType type = TauType::a;
        int terminal_color = 0;
        int terminal_index = 0;

        auto t() const -> int { return static_cast<int>(vertices.size()); }
        auto last() const -> int { return vertices.back(); }
    };

    // Only f.center and the vertex set of f are used, so the fan may come
    // from an earlier coloring as long as its vertices still form one.
    // Throws PreconditionError if tau is missing on F, MaximalityViolation if
    // the walk reaches a max-degree vertex.
    auto build_tau_sequence(const PartialEdgeColoring & phi, const Multifan & f, int tau) -> TauSequence;

    // Colors of [1, k] not missing on V(F).
    auto eligible_taus(const PartialEdgeColoring & phi, const Multifan & f) -> std::vector<int>;

    struct Step
    {
        enum class Op
        {
            swap,
            shift,
            relabel
        };

        Op op = Op::swap;
        int alpha = 0, beta = 0;   // swap colors
        int anchor = -1;           // swap vertex
        int center = -1;           // shift center
        std::vector<int> range;    // shift vertices
        std::vector<int> mapping;  // relabel, mapping[old] = new

        static auto swap(int anchor, int alpha, int beta) -> Step;
        static auto shift(int center, std::vector<int> range) -> Step;
        static auto relabel(std::vector<int> mapping) -> Step;
    };

    struct Transcript
    {
        std::vector<Step> steps;

        auto empty() const -> bool { return steps.empty(); }
    };

    auto apply_step(const PartialEdgeColoring & phi, const Step & step) -> PartialEdgeColoring;
    auto replay(const PartialEdgeColoring & start, const Transcript & transcript) -> PartialEdgeColoring;

    // True iff no Kempe change of the transcript uses a color of s. Shifts
    // and relabels are not Kempe changes and are ignored here.
    auto is_avoiding(const Transcript & transcript, ColorSet s) -> bool;
    auto has_non_kempe_steps(const Transcript & transcript) -> bool;

    auto to_json(const Step & step) -> nlohmann::json;
    auto to_json(const Transcript & transcript) -> nlohmann::json;
    auto transcript_from_json(const nlohmann::json & j) -> Transcript;

    // Recolors r v_i with the missing color of v_i for every listed vertex.
    // Throws ShiftRejected (phi untouched) if the result is not proper or a
    // listed vertex does not miss exactly one color.
    auto shift(const PartialEdgeColoring & phi, int center, const std::vector<int> & vertices) -> PartialEdgeColoring;

    // Records each operation while applying it to a working coloring.
    class Recorder
    {
    private:
        PartialEdgeColoring _current;
        Transcript _transcript;

    public:
        explicit Recorder(PartialEdgeColoring start) :
            _current(std::move(start))
        {
        }

        auto swap(int anchor, int alpha, int beta) -> void;
        auto shift(int center, const std::vector<int> & vertices) -> void;
        auto relabel_pair(int a, int b) -> void;

        auto current() const -> const PartialEdgeColoring & { return _current; }
        auto transcript() const -> const Transcript & { return _transcript; }
    };

    // Hypotheses shared by the tau-sequence checks: class two, critical
    // edge, light center, typical fan with delta colors.
    auto tau_hypotheses(const GraphFacts & facts, const PartialEdgeColoring & phi, const Multifan & f)
        -> std::optional<std::string>;

    // Every eligible tau has a sequence satisfying the definition clause by
    // clause, with exactly one terminal type.
    auto verify_tau_sequences(const GraphFacts & facts, const PartialEdgeColoring & phi, const Multifan & f) -> Verdict;

    // For every tau not missing on a maximum fan, r lies on P_{s_1}(tau,
    // delta) and on P_{s_1}(2, tau). CONDITIONAL unless the fan is EXACT.
    auto verify_rs1_linkage(const GraphFacts & facts, const PartialEdgeColoring & phi, const Multifan & f) -> Verdict;

    struct ShiftResult
    {
        PartialEdgeColoring coloring;
        Transcript transcript;
    };

    // A- or B-shifting of the tau-sequence to cut the (tau, other)-chain
    // through r v_1 joining x and y. Throws PreconditionError when x and y
    // are not linked, the chain misses r v_1, x or y lies on the sequence or
    // neither shifting is eligible.
    auto unlink_via_shifting(const PartialEdgeColoring & phi, const Multifan & f, int tau, int x, int y, int other)
        -> ShiftResult;

    enum class WitnessStatus
    {
        witness,
        excluded,
        fail,
        inapplicable,
        unknown
    };

    auto to_string(WitnessStatus s) -> std::string;

    struct TauWitness
    {
        WitnessStatus status = WitnessStatus::unknown;
        std::optional<PartialEdgeColoring> coloring;
        Transcript transcript;
        std::string method; // trivial, construction, search, unless, reduced
        std::string detail;
    };

    struct WitnessOptions
    {
        long long search_budget = 3000; // colorings visited by the fallback search
    };

    struct TauInstance
    {
        int item;
        int x;
        int tau;
    };

    // Items 1..7 with their preconditions met: x outside N[r], tau not
    // missing on F, x missing tau or delta, and tau missing at x for items
    // 1, 2 and 7.
    auto tau_item_instances(const PartialEdgeColoring & phi, const Multifan & f) -> std::vector<TauInstance>;

    // The target of an item for a candidate coloring: stability class,
    // avoided colors and the chain condition. Returns the first unmet part.
    auto tau_item_unmet(const PartialEdgeColoring & phi, const Multifan & f, int item, int x, int tau,
        const PartialEdgeColoring & candidate, const Transcript & transcript) -> std::optional<std::string>;

    // Colors an item's Kempe changes must avoid.
    auto tau_item_avoid(int item, int tau, int delta) -> ColorSet;

    // Constructs the coloring promised by one item of the tau-sequence
    // recoloring lemma, following its proof case by case, then falls back to
    // a bounded search over avoiding Kempe changes and shifts. EXCLUDED when
    // the item's exception applies, directly or after a checked reduction.
    auto witness_tau_item(const GraphFacts & facts, const PartialEdgeColoring & phi, const Multifan & f, int item,
        int x, int tau, const WitnessOptions & options = {}) -> TauWitness;

    // Shortest sequence of Kempe changes turning start into target, if one
    // is found within the budget. Used to test whether a shift is reachable
    // by Kempe changes alone on tiny instances.
    auto find_kempe_equivalent(const PartialEdgeColoring & start, const PartialEdgeColoring & target, long long budget)
        -> std::optional<Transcript>;
}

#endif
