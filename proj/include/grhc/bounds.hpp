#pragma once

// Registry of Ramsey / Gallai-Ramsey lower bounds and the rules that derive
// new bounds from old ones. Every record means kind(targets; r) >= value.
//
// Manifest lines:
//   <kind> r=<r> targets=<p1,p2,...> value=<v> prov=<provenance>
// with provenance one of
//   base <citation>
//   exact <citation>                      (a known exact value)
//   derived <Rule>[<detail>] <- <input key> ; <input key> ...

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grhc/core.hpp"

namespace grhc {

enum class BoundKind : std::uint8_t { R, gr };

std::string to_string(BoundKind kind);

struct Provenance {
    enum class Origin : std::uint8_t { Base, Exact, Derived };
    Origin origin = Origin::Base;
    std::string citation;             // Base / Exact
    std::string rule;                 // Derived
    std::string detail;               // Derived, rule parameters
    std::vector<std::string> inputs;  // Derived, input record keys

    std::string to_string() const;
    static Provenance parse(std::string_view text);
    bool operator==(const Provenance&) const = default;
};

struct BoundKey {
    unsigned uniformity = 0;
    BoundKind kind = BoundKind::R;
    std::vector<TargetPattern> targets;  // sorted ascending

    auto operator<=>(const BoundKey&) const = default;
    std::string to_string() const;  // "gr r=3 targets=K4,K5"
};

struct BoundRecord {
    BoundKind kind = BoundKind::R;
    unsigned uniformity = 3;
    std::vector<TargetPattern> targets;
    std::uint64_t value = 0;
    Provenance provenance;

    /// Sorts targets into canonical order and checks value >= r and each
    /// pattern against r. Throws ConfigError / InvalidPatternError.
    void normalize();

    BoundKey key() const { return BoundKey{uniformity, kind, targets}; }
    std::size_t color_count() const { return targets.size(); }
    std::string to_line() const;
    static BoundRecord parse_line(std::string_view line);

    bool operator==(const BoundRecord&) const = default;
};

/// Helper for seeds: kind(targets; r) >= value with a base citation.
BoundRecord make_base(BoundKind kind, unsigned uniformity, std::string_view targets, std::uint64_t value, std::string citation,
                      bool exact = false);

/// An immutable-by-convention set of records, at most one per key (the
/// largest value wins; ties keep the canonically smaller provenance).
class BoundRegistry {
public:
    /// Returns true if the registry changed.
    bool insert(BoundRecord record);

    const BoundRecord* find(const BoundKey& key) const;
    const BoundRecord* find(std::string_view key_text) const;
    const std::map<BoundKey, BoundRecord>& records() const { return records_; }
    std::size_t size() const { return records_.size(); }

    std::string to_manifest() const;
    static BoundRegistry from_manifest(std::string_view text);

    bool operator==(const BoundRegistry&) const = default;

private:
    std::map<BoundKey, BoundRecord> records_;
};

BoundKey parse_bound_key(std::string_view text);

// ---- derivation rules; each returns nullopt when its hypothesis fails ----

/// gr = R for fewer than r+1 colors: the counterpart record of the other kind.
std::optional<BoundRecord> rule_gallai_equals_ramsey(const BoundRecord& record);

/// 3-uniform square: appends K4,K4 with value (v-1)^2 + 1. Targets must have
/// order > 3.
std::optional<BoundRecord> rule_square3(const BoundRecord& record);

/// 4-uniform square: appends K5,K5 with value (v-1)^2 + 1. Targets must have
/// order > 4.
std::optional<BoundRecord> rule_square4(const BoundRecord& record);

/// One slot of the lexicographic-product bound: indices into the two factor
/// records' target lists, -1 meaning the factor contributes K_r there.
struct LexSlot {
    int outer = -1;
    int inner = -1;
};

/// Slots in position order; the last slot is the product slot, whose target
/// is K_{(a-1)(b-1)+1} for factor targets K_a, K_b.
using LexAlignment = std::vector<LexSlot>;

/// Every alignment of two factors with the given target counts, leaving out
/// slots padded on both sides (those only add an unusable color).
std::vector<LexAlignment> lex_alignments(std::size_t outer_targets, std::size_t inner_targets);

/// Lexicographic-product bound: slot targets K_{max(a,b)}, product slot as
/// above, value (v1-1)(v2-1)+1. Both records must be complete-target, same
/// kind, same r >= 3.
std::optional<BoundRecord> rule_lex(const BoundRecord& outer, const BoundRecord& inner, const LexAlignment& alignment);

/// Blow-up bound: appends `target` with value (chi-1)(v-1) + s. Requires v >= s.
std::optional<BoundRecord> rule_burr(const BoundRecord& record, const TargetPattern& target);

/// Graph to 3-uniform lift: K_s targets (s >= 3) become K_{2s-1}-e, same value.
std::optional<BoundRecord> rule_lift(const BoundRecord& record);

/// 4-uniform two-color step R(K_{p+1}, K_q) >= 2v - 1 for p, q >= 5; both
/// increments are produced.
std::vector<BoundRecord> rule_song_step(const BoundRecord& record);

/// Monotonicity: replaces targets[index] by a pattern containing it; the value
/// carries over.
std::optional<BoundRecord> rule_target_weakening(const BoundRecord& record, std::size_t index, const TargetPattern& larger);

struct DeriveOptions {
    // Repeat rounds until nothing changes or max_rounds is reached.
    bool iterate = false;
    unsigned max_rounds = 2;
    // Records with more targets are never produced.
    std::size_t max_targets = 6;
    // Lexicographic combinations only consider factors this small.
    std::size_t lex_max_factor_targets = 4;
};

struct DerivationResult {
    BoundRegistry registry;
    std::vector<std::string> log;
};

/// One round (or, with iterate, several) of every rule over every applicable
/// record or record pair. The output is independent of insertion order.
DerivationResult derive_bounds(const BoundRegistry& registry, const DeriveOptions& options = {});

/// Recomputes a derived record's value from the registry's input records.
/// nullopt if an input is missing or the record is not derived.
std::optional<std::uint64_t> recompute_value(const BoundRecord& record, const BoundRegistry& registry);

/// gr^t(K3; 2): 5^{t/2} + 1 for even t, 2 * 5^{(t-1)/2} + 1 for odd t.
std::uint64_t chung_graham_value(unsigned t);

/// The published base bounds the reference table starts from.
BoundRegistry reference_base_registry();

struct TableRow {
    std::string label;
    std::optional<BoundRecord> record;
    std::uint64_t published = 0;
    bool match = false;
    std::string note;
};

/// Reproduces the reference table of derived 3- and 4-uniform bounds from
/// reference_base_registry(), flagging each row against its published value.
std::vector<TableRow> figure1_table();

/// Aligned text followed by one machine-readable line per row.
std::string render_table(const std::vector<TableRow>& rows);

}  // namespace grhc
