#include "grhc/bounds.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <iomanip>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "grhc/certio.hpp"
#include "grhc/chromatic.hpp"
#include "grhc/error.hpp"

namespace grhc {

namespace {

std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) return std::nullopt;
    return out;
}

std::optional<std::uint64_t> square_plus_one(std::uint64_t v) {
    auto sq = checked_mul(v - 1, v - 1);
    if (!sq || *sq == UINT64_MAX) return std::nullopt;
    return *sq + 1;
}

std::string join_targets(const std::vector<TargetPattern>& targets) { return format_avoid_list(targets); }

std::uint64_t parse_u64(std::string_view text, std::string_view what) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
        throw ParseError("malformed " + std::string(what) + " '" + std::string(text) + "'");
    return v;
}

BoundKind parse_kind(std::string_view text) {
    if (text == "R") return BoundKind::R;
    if (text == "gr") return BoundKind::gr;
    throw ParseError("unknown bound kind '" + std::string(text) + "'");
}

std::vector<TargetPattern> parse_targets(std::string_view text, unsigned r) { return parse_avoid_list(text, r); }

BoundRecord derived(const BoundRecord& shape, std::string rule, std::string detail, std::vector<const BoundRecord*> inputs) {
    BoundRecord out = shape;
    out.provenance = Provenance{};
    out.provenance.origin = Provenance::Origin::Derived;
    out.provenance.rule = std::move(rule);
    out.provenance.detail = std::move(detail);
    for (const auto* in : inputs) out.provenance.inputs.push_back(in->key().to_string());
    out.normalize();
    return out;
}

// Chromatic data of small target patterns, shared across calls.
ChromaticData pattern_chromatic(const TargetPattern& target, unsigned r) {
    static std::mutex mutex;
    static std::map<std::pair<TargetPattern, unsigned>, ChromaticData> cache;
    const std::lock_guard lock(mutex);
    auto it = cache.find({target, r});
    if (it == cache.end()) it = cache.emplace(std::pair{target, r}, chromatic_data(Hypergraph::from_pattern(target, r))).first;
    return it->second;
}

bool all_complete(const BoundRecord& record) {
    return std::all_of(record.targets.begin(), record.targets.end(), [](const TargetPattern& p) { return p.kind == PatternKind::Complete; });
}

}  // namespace

std::string to_string(BoundKind kind) { return kind == BoundKind::R ? "R" : "gr"; }

std::string Provenance::to_string() const {
    switch (origin) {
        case Origin::Base: return "base " + citation;
        case Origin::Exact: return "exact " + citation;
        case Origin::Derived: {
            std::string out = "derived " + rule;
            if (!detail.empty()) out += "[" + detail + "]";
            out += " <-";
            for (std::size_t i = 0; i < inputs.size(); ++i) out += (i ? " ; " : " ") + inputs[i];
            return out;
        }
    }
    return {};
}

Provenance Provenance::parse(std::string_view text) {
    Provenance p;
    auto space = text.find(' ');
    const auto head = text.substr(0, space);
    const auto rest = space == std::string_view::npos ? std::string_view{} : text.substr(space + 1);
    if (head == "base" || head == "exact") {
        p.origin = head == "base" ? Origin::Base : Origin::Exact;
        p.citation = std::string(rest);
        return p;
    }
    if (head != "derived") throw ParseError("unknown provenance '" + std::string(text) + "'");
    p.origin = Origin::Derived;
    const auto arrow = rest.find(" <-");
    if (arrow == std::string_view::npos) throw ParseError("derived provenance lacks '<-'");
    auto rule = rest.substr(0, arrow);
    if (auto open = rule.find('['); open != std::string_view::npos) {
        if (!rule.ends_with("]")) throw ParseError("unterminated rule detail");
        p.detail = std::string(rule.substr(open + 1, rule.size() - open - 2));
        rule = rule.substr(0, open);
    }
    p.rule = std::string(rule);
    auto inputs = rest.substr(arrow + 3);
    while (!inputs.empty()) {
        if (inputs.front() == ' ') inputs.remove_prefix(1);
        auto sep = inputs.find(" ; ");
        p.inputs.emplace_back(inputs.substr(0, sep));
        if (sep == std::string_view::npos) break;
        inputs.remove_prefix(sep + 3);
    }
    return p;
}

std::string BoundKey::to_string() const {
    return grhc::to_string(kind) + " r=" + std::to_string(uniformity) + " targets=" + join_targets(targets);
}

void BoundRecord::normalize() {
    if (uniformity < 2) throw ConfigError("bound uniformity must be at least 2");
    if (targets.empty()) throw ConfigError("bound needs at least one target");
    for (const auto& t : targets) t.validate(uniformity);
    std::sort(targets.begin(), targets.end());
    if (value < uniformity) throw ConfigError("bound value " + std::to_string(value) + " is below the uniformity");
}

std::string BoundRecord::to_line() const {
    return key().to_string() + " value=" + std::to_string(value) + " prov=" + provenance.to_string();
}

BoundRecord BoundRecord::parse_line(std::string_view line) {
    auto take = [&](std::string_view prefix) {
        auto sp = line.find(' ');
        auto tok = line.substr(0, sp);
        line = sp == std::string_view::npos ? std::string_view{} : line.substr(sp + 1);
        if (!tok.starts_with(prefix)) throw ParseError("expected '" + std::string(prefix) + "' field in bound record");
        return tok.substr(prefix.size());
    };
    BoundRecord rec;
    rec.kind = parse_kind(take(""));
    rec.uniformity = static_cast<unsigned>(parse_u64(take("r="), "uniformity"));
    const auto targets = take("targets=");
    rec.value = parse_u64(take("value="), "value");
    if (!line.starts_with("prov=")) throw ParseError("expected 'prov=' field in bound record");
    rec.provenance = Provenance::parse(line.substr(5));
    if (rec.uniformity < 2) throw ConfigError("bound uniformity must be at least 2");
    rec.targets = parse_targets(targets, rec.uniformity);
    rec.normalize();
    return rec;
}

BoundKey parse_bound_key(std::string_view text) {
    // Reuse the record parser with a placeholder tail.
    auto rec = BoundRecord::parse_line(std::string(text) + " value=4294967295 prov=base -");
    return rec.key();
}

BoundRecord make_base(BoundKind kind, unsigned uniformity, std::string_view targets, std::uint64_t value, std::string citation, bool exact) {
    BoundRecord rec;
    rec.kind = kind;
    rec.uniformity = uniformity;
    rec.targets = parse_targets(targets, uniformity);
    rec.value = value;
    rec.provenance.origin = exact ? Provenance::Origin::Exact : Provenance::Origin::Base;
    rec.provenance.citation = std::move(citation);
    rec.normalize();
    return rec;
}

bool BoundRegistry::insert(BoundRecord record) {
    record.normalize();
    auto key = record.key();
    auto it = records_.find(key);
    if (it == records_.end()) {
        records_.emplace(std::move(key), std::move(record));
        return true;
    }
    auto& cur = it->second;
    const bool better = record.value > cur.value ||
                        (record.value == cur.value && record.provenance.to_string() < cur.provenance.to_string() &&
                         // base and exact records are never displaced by derived ones of equal value
                         !(cur.provenance.origin != Provenance::Origin::Derived && record.provenance.origin == Provenance::Origin::Derived));
    if (better) cur = std::move(record);
    return better;
}

const BoundRecord* BoundRegistry::find(const BoundKey& key) const {
    auto it = records_.find(key);
    return it == records_.end() ? nullptr : &it->second;
}

const BoundRecord* BoundRegistry::find(std::string_view key_text) const { return find(parse_bound_key(key_text)); }

std::string BoundRegistry::to_manifest() const {
    std::string out;
    for (const auto& [key, rec] : records_) out += rec.to_line() + "\n";
    return out;
}

BoundRegistry BoundRegistry::from_manifest(std::string_view text) {
    BoundRegistry reg;
    std::size_t lineno = 0;
    while (!text.empty()) {
        auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty() || line.front() == '#') continue;
        try {
            reg.insert(BoundRecord::parse_line(line));
        } catch (const Error& e) {
            throw ParseError("manifest line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return reg;
}

// ---------------------------------------------------------------- rules

std::optional<BoundRecord> rule_gallai_equals_ramsey(const BoundRecord& record) {
    if (record.color_count() >= record.uniformity + 1u) return std::nullopt;
    BoundRecord shape = record;
    shape.kind = record.kind == BoundKind::R ? BoundKind::gr : BoundKind::R;
    return derived(shape, "GallaiEqualsRamsey", "", {&record});
}

namespace {

std::optional<BoundRecord> square_rule(const BoundRecord& record, unsigned r, const char* name) {
    if (record.uniformity != r) return std::nullopt;
    for (const auto& t : record.targets)
        if (t.order <= r) return std::nullopt;
    auto value = square_plus_one(record.value);
    if (!value) return std::nullopt;
    BoundRecord shape = record;
    shape.targets.push_back({r + 1, PatternKind::Complete});
    shape.targets.push_back({r + 1, PatternKind::Complete});
    shape.value = *value;
    return derived(shape, name, "", {&record});
}

}  // namespace

std::optional<BoundRecord> rule_square3(const BoundRecord& record) { return square_rule(record, 3, "Square3"); }
std::optional<BoundRecord> rule_square4(const BoundRecord& record) { return square_rule(record, 4, "Square4"); }

std::vector<LexAlignment> lex_alignments(std::size_t outer_targets, std::size_t inner_targets) {
    std::vector<LexAlignment> out;
    const int ka = static_cast<int>(outer_targets);
    const int kb = static_cast<int>(inner_targets);
    for (int la = -1; la < ka; ++la) {
        for (int lb = -1; lb < kb; ++lb) {
            std::vector<int> rest_a, rest_b;
            for (int i = 0; i < ka; ++i)
                if (i != la) rest_a.push_back(i);
            for (int j = 0; j < kb; ++j)
                if (j != lb) rest_b.push_back(j);
            // Partial injections rest_a -> rest_b; unmatched entries pair with padding.
            std::vector<bool> taken(rest_b.size(), false);
            LexAlignment slots;
            auto rec = [&](auto&& self, std::size_t i) -> void {
                if (i == rest_a.size()) {
                    LexAlignment full = slots;
                    for (std::size_t j = 0; j < rest_b.size(); ++j)
                        if (!taken[j]) full.push_back({-1, rest_b[j]});
                    full.push_back({la, lb});
                    out.push_back(std::move(full));
                    return;
                }
                slots.push_back({rest_a[i], -1});
                self(self, i + 1);
                slots.pop_back();
                for (std::size_t j = 0; j < rest_b.size(); ++j) {
                    if (taken[j]) continue;
                    taken[j] = true;
                    slots.push_back({rest_a[i], rest_b[j]});
                    self(self, i + 1);
                    slots.pop_back();
                    taken[j] = false;
                }
            };
            rec(rec, 0);
        }
    }
    return out;
}

namespace {

// Targets (unsorted) and value of a lexicographic bound, without provenance.
struct LexShape {
    std::vector<TargetPattern> targets;
    std::uint64_t value = 0;
};

std::optional<LexShape> lex_shape(const BoundRecord& outer, const BoundRecord& inner, const LexAlignment& alignment) {
    const unsigned r = outer.uniformity;
    if (inner.uniformity != r || r < 3 || outer.kind != inner.kind) return std::nullopt;
    if (!all_complete(outer) || !all_complete(inner) || alignment.empty()) return std::nullopt;
    // K_r where a factor is padded.
    auto order_at = [&](const BoundRecord& rec, int idx) -> unsigned { return idx < 0 ? r : rec.targets[idx].order; };
    std::uint32_t seen_a = 0, seen_b = 0;
    LexShape shape;
    shape.targets.reserve(alignment.size());
    for (std::size_t s = 0; s < alignment.size(); ++s) {
        const auto [ia, ib] = alignment[s];
        if (ia >= static_cast<int>(outer.targets.size()) || ib >= static_cast<int>(inner.targets.size())) return std::nullopt;
        if (ia >= 0) {
            if (seen_a >> ia & 1) return std::nullopt;
            seen_a |= 1u << ia;
        }
        if (ib >= 0) {
            if (seen_b >> ib & 1) return std::nullopt;
            seen_b |= 1u << ib;
        }
        const unsigned a = order_at(outer, ia), b = order_at(inner, ib);
        const unsigned q = s + 1 == alignment.size() ? (a - 1) * (b - 1) + 1 : std::max(a, b);
        shape.targets.push_back({q, PatternKind::Complete});
    }
    // Every factor target must be placed.
    if (std::popcount(seen_a) != static_cast<int>(outer.targets.size()) || std::popcount(seen_b) != static_cast<int>(inner.targets.size()))
        return std::nullopt;
    auto product = checked_mul(outer.value - 1, inner.value - 1);
    if (!product || *product == UINT64_MAX) return std::nullopt;
    shape.value = *product + 1;
    return shape;
}

}  // namespace

std::optional<BoundRecord> rule_lex(const BoundRecord& outer, const BoundRecord& inner, const LexAlignment& alignment) {
    if (outer.targets.size() > 32 || inner.targets.size() > 32) return std::nullopt;
    auto shape = lex_shape(outer, inner, alignment);
    if (!shape) return std::nullopt;
    std::string fa, fb;
    for (std::size_t s = 0; s < alignment.size(); ++s) {
        const auto [ia, ib] = alignment[s];
        fa += (s ? ",K" : "K") + std::to_string(ia < 0 ? outer.uniformity : outer.targets[ia].order);
        fb += (s ? ",K" : "K") + std::to_string(ib < 0 ? inner.uniformity : inner.targets[ib].order);
    }
    BoundRecord rec = outer;
    rec.targets = std::move(shape->targets);
    rec.value = shape->value;
    return derived(rec, "LexExooRad", "factors=" + fa + "|" + fb, {&outer, &inner});
}

std::optional<BoundRecord> rule_burr(const BoundRecord& record, const TargetPattern& target) {
    if (target.order > kChromaticMaxOrder) return std::nullopt;
    try {
        target.validate(record.uniformity);
    } catch (const InvalidPatternError&) {
        return std::nullopt;
    }
    const auto data = pattern_chromatic(target, record.uniformity);
    if (record.value < data.s) return std::nullopt;
    auto scaled = checked_mul(data.chi - 1, record.value - 1);
    if (!scaled || *scaled > UINT64_MAX - data.s) return std::nullopt;
    BoundRecord shape = record;
    shape.targets.push_back(target);
    shape.value = *scaled + data.s;
    return derived(shape, "Burr", target.to_string(), {&record});
}

std::optional<BoundRecord> rule_lift(const BoundRecord& record) {
    if (record.uniformity != 2 || !all_complete(record)) return std::nullopt;
    BoundRecord shape = record;
    shape.uniformity = 3;
    for (auto& t : shape.targets) {
        if (t.order < 3) return std::nullopt;
        t = TargetPattern{2 * t.order - 1, PatternKind::MinusOne};
    }
    return derived(shape, "Lift", "", {&record});
}

std::vector<BoundRecord> rule_song_step(const BoundRecord& record) {
    std::vector<BoundRecord> out;
    if (record.kind != BoundKind::R || record.uniformity != 4 || record.targets.size() != 2 || !all_complete(record)) return out;
    if (record.targets[0].order < 5 || record.targets[1].order < 5) return out;
    if (record.value > UINT64_MAX / 2) return out;
    for (std::size_t i = 0; i < 2; ++i) {
        BoundRecord shape = record;
        ++shape.targets[i].order;
        shape.value = 2 * record.value - 1;
        auto rec = derived(shape, "SongStep", "", {&record});
        if (std::none_of(out.begin(), out.end(), [&](const BoundRecord& o) { return o.key() == rec.key(); })) out.push_back(std::move(rec));
    }
    return out;
}

std::optional<BoundRecord> rule_target_weakening(const BoundRecord& record, std::size_t index, const TargetPattern& larger) {
    if (index >= record.targets.size()) return std::nullopt;
    const auto& old = record.targets[index];
    if (old == larger || !pattern_contains(larger, old, record.uniformity)) return std::nullopt;
    try {
        larger.validate(record.uniformity);
    } catch (const InvalidPatternError&) {
        return std::nullopt;
    }
    BoundRecord shape = record;
    shape.targets[index] = larger;
    return derived(shape, "TargetWeakening", old.to_string() + "->" + larger.to_string(), {&record});
}

// ---------------------------------------------------------------- engine

namespace {

void cross_fill(BoundRegistry& reg) {
    std::vector<BoundRecord> extra;
    for (const auto& [key, rec] : reg.records())
        if (auto other = rule_gallai_equals_ramsey(rec)) extra.push_back(std::move(*other));
    for (auto& rec : extra) reg.insert(std::move(rec));
}

BoundRegistry one_round(const BoundRegistry& input, const DeriveOptions& options, std::vector<std::string>& log) {
    BoundRegistry current = input;
    cross_fill(current);
    BoundRegistry out = current;
    auto add = [&](std::optional<BoundRecord> rec) {
        if (!rec) return;
        if (rec->targets.size() > options.max_targets) return;
        out.insert(std::move(*rec));
    };
    std::vector<const BoundRecord*> records;
    for (const auto& [key, rec] : current.records()) records.push_back(&rec);

    for (const auto* rec : records) {
        const auto key = rec->key().to_string();
        if (rec->uniformity == 3) {
            auto sq = rule_square3(*rec);
            if (!sq) log.push_back("Square3 skipped for " + key + ": needs every target of order > 3");
            add(std::move(sq));
        }
        if (rec->uniformity == 4) {
            auto sq = rule_square4(*rec);
            if (!sq) log.push_back("Square4 skipped for " + key + ": needs every target of order > 4");
            add(std::move(sq));
        }
        if (rec->uniformity == 2) add(rule_lift(*rec));
        for (auto& s : rule_song_step(*rec)) add(std::move(s));
        std::set<TargetPattern> distinct(rec->targets.begin(), rec->targets.end());
        for (const auto& t : distinct) {
            auto b = rule_burr(*rec, t);
            if (!b && t.order <= kChromaticMaxOrder) log.push_back("Burr skipped for " + key + " with " + t.to_string() + ": hypothesis fails");
            add(std::move(b));
        }
    }
    std::map<std::pair<std::size_t, std::size_t>, std::vector<LexAlignment>> alignments;
    for (const auto* a : records) {
        if (a->targets.size() > options.lex_max_factor_targets || !all_complete(*a) || a->uniformity < 3) continue;
        for (const auto* b : records) {
            if (b->targets.size() > options.lex_max_factor_targets || !all_complete(*b)) continue;
            if (a->uniformity != b->uniformity || a->kind != b->kind) continue;
            auto [it, fresh] = alignments.try_emplace({a->targets.size(), b->targets.size()});
            if (fresh) {
                for (auto& al : lex_alignments(a->targets.size(), b->targets.size()))
                    if (al.size() <= options.max_targets) it->second.push_back(std::move(al));
            }
            for (const auto& al : it->second) {
                auto shape = lex_shape(*a, *b, al);
                if (!shape) continue;
                std::sort(shape->targets.begin(), shape->targets.end());
                // Only build provenance when the record could win.
                const auto* have = out.find(BoundKey{a->uniformity, a->kind, shape->targets});
                if (have && have->value > shape->value) continue;
                add(rule_lex(*a, *b, al));
            }
        }
    }
    cross_fill(out);
    return out;
}

// Inputs may have been raised in the same round; re-evaluate dependents so
// every derived value matches its inputs exactly.
void refresh(BoundRegistry& reg);

}  // namespace

DerivationResult derive_bounds(const BoundRegistry& registry, const DeriveOptions& options) {
    DerivationResult result;
    result.registry = registry;
    const unsigned rounds = options.iterate ? std::max(1u, options.max_rounds) : 1u;
    for (unsigned i = 0; i < rounds; ++i) {
        auto next = one_round(result.registry, options, result.log);
        refresh(next);
        const bool changed = !(next == result.registry);
        result.registry = std::move(next);
        if (!changed) break;
    }
    std::sort(result.log.begin(), result.log.end());
    result.log.erase(std::unique(result.log.begin(), result.log.end()), result.log.end());
    return result;
}

std::optional<std::uint64_t> recompute_value(const BoundRecord& record, const BoundRegistry& registry) {
    const auto& p = record.provenance;
    if (p.origin != Provenance::Origin::Derived) return std::nullopt;
    std::vector<const BoundRecord*> in;
    for (const auto& key : p.inputs) {
        const auto* r = registry.find(key);
        if (!r) return std::nullopt;
        in.push_back(r);
    }
    if (in.empty()) return std::nullopt;
    const std::uint64_t v = in[0]->value;
    if (p.rule == "GallaiEqualsRamsey" || p.rule == "Lift" || p.rule == "TargetWeakening") return v;
    if (p.rule == "Square3" || p.rule == "Square4") return square_plus_one(v);
    if (p.rule == "SongStep") return 2 * v - 1;
    if (p.rule == "LexExooRad") {
        if (in.size() != 2) return std::nullopt;
        return (v - 1) * (in[1]->value - 1) + 1;
    }
    if (p.rule == "Burr") {
        const auto target = parse_pattern(p.detail, record.uniformity);
        const auto data = pattern_chromatic(target, record.uniformity);
        return (data.chi - 1) * (v - 1) + data.s;
    }
    return std::nullopt;
}

namespace {

void refresh(BoundRegistry& reg) {
    for (int pass = 0; pass < 64; ++pass) {
        std::vector<BoundRecord> raised;
        for (const auto& [key, rec] : reg.records()) {
            const auto v = recompute_value(rec, reg);
            if (v && *v != rec.value) {
                raised.push_back(rec);
                raised.back().value = *v;
            }
        }
        if (raised.empty()) return;
        // Rules are monotone in their inputs, so a refreshed value only grows.
        for (auto& rec : raised) reg.insert(std::move(rec));
    }
}

}  // namespace

std::uint64_t chung_graham_value(unsigned t) {
    if (t == 0) throw ConfigError("chung_graham_value needs t >= 1");
    std::uint64_t power = 1;
    for (unsigned i = 0; i < t / 2; ++i) {
        auto next = checked_mul(power, 5);
        if (!next) throw CapacityError("value overflows 64 bits");
        power = *next;
    }
    return t % 2 == 0 ? power + 1 : 2 * power + 1;
}

BoundRegistry reference_base_registry() {
    BoundRegistry reg;
    using K = BoundKind;
    reg.insert(make_base(K::R, 3, "K4-e,K4-e", 7, "survey", true));
    reg.insert(make_base(K::R, 3, "K4-e,K4", 8, "published exact value", true));
    reg.insert(make_base(K::R, 3, "K4-e,K4-e,K4-e", 13, "Exoo"));
    reg.insert(make_base(K::R, 3, "K4,K4", 13, "McKay-Radziszowski", true));
    reg.insert(make_base(K::R, 3, "K4,K5", 35, "Dybizbanski"));
    reg.insert(make_base(K::R, 3, "K4,K6", 58, "Exoo"));
    reg.insert(make_base(K::R, 3, "K5,K5", 82, "Exoo"));
    reg.insert(make_base(K::R, 3, "K4,K4,K4", 56, "Exoo"));
    reg.insert(make_base(K::R, 3, "K5,K5,K5", 163, "published construction"));
    reg.insert(make_base(K::R, 3, "K5-e,K5-e", 14, "explicit 13-vertex colorings (McKay)"));
    reg.insert(make_base(K::R, 3, "K5,K5,K5,K5", 131073, "published construction"));
    reg.insert(make_base(K::R, 4, "K5,K5", 34, "Exoo"));
    return reg;
}

namespace {

struct TablePlan {
    BoundRegistry reg;
    std::vector<TableRow> rows;

    const BoundRecord& need(std::string_view key) {
        const auto* rec = reg.find(key);
        if (!rec) throw ConfigError("missing base record " + std::string(key));
        return *rec;
    }

    void row(std::string label, std::optional<BoundRecord> rec, std::uint64_t published, std::string note = {}) {
        TableRow r;
        r.label = std::move(label);
        r.published = published;
        r.match = rec && rec->value == published;
        r.note = rec ? std::move(note) : "underivable";
        if (rec) reg.insert(*rec);
        r.record = std::move(rec);
        rows.push_back(std::move(r));
    }

    // Lexicographic bound whose canonical targets equal `want`.
    std::optional<BoundRecord> lex_to(std::string_view a, std::string_view b, std::string_view want, unsigned r = 3) {
        const auto& ra = need(a);
        const auto& rb = need(b);
        auto want_targets = parse_avoid_list(want, r);
        std::sort(want_targets.begin(), want_targets.end());
        std::optional<BoundRecord> best;
        for (const auto& al : lex_alignments(ra.targets.size(), rb.targets.size())) {
            auto rec = rule_lex(ra, rb, al);
            if (rec && rec->targets == want_targets && (!best || rec->value > best->value)) best = std::move(rec);
        }
        return best;
    }

    std::optional<BoundRecord> weaken(const std::optional<BoundRecord>& rec, std::string_view from, std::string_view to) {
        if (!rec) return std::nullopt;
        const auto old = parse_pattern(from, rec->uniformity);
        const auto larger = parse_pattern(to, rec->uniformity);
        auto it = std::find(rec->targets.begin(), rec->targets.end(), old);
        if (it == rec->targets.end()) return std::nullopt;
        reg.insert(*rec);
        return rule_target_weakening(*rec, static_cast<std::size_t>(it - rec->targets.begin()), larger);
    }
};

}  // namespace

std::vector<TableRow> figure1_table() {
    TablePlan plan;
    plan.reg = reference_base_registry();
    cross_fill(plan.reg);

    plan.row("Square3 on gr(K4-e,K4-e;3) >= 7", rule_square3(plan.need("gr r=3 targets=K4-e,K4-e")), 37);
    plan.row("Square3 on gr(K4-e,K4;3) >= 8", rule_square3(plan.need("gr r=3 targets=K4-e,K4")), 50);
    plan.row("Square3 on gr(K4-e,K4-e,K4-e;3) >= 13", rule_square3(plan.need("gr r=3 targets=K4-e,K4-e,K4-e")), 145);
    plan.row("Square3 on gr(K4,K4;3) >= 13", rule_square3(plan.need("gr r=3 targets=K4,K4")), 145);
    plan.row("Square3 on gr(K4,K5;3) >= 35", rule_square3(plan.need("gr r=3 targets=K4,K5")), 1157);
    plan.row("LexExooRad on gr(K4,K5;3) >= 35 twice", plan.lex_to("gr r=3 targets=K4,K5", "gr r=3 targets=K4,K5", "K4,K5,K5,K7"), 1157);
    plan.row("LexExooRad on gr(K4,K5;3), gr(K5,K5;3)", plan.lex_to("gr r=3 targets=K4,K5", "gr r=3 targets=K5,K5", "K4,K5,K5,K9"), 2755);
    plan.row("LexExooRad on gr(K5,K5;3), gr(K4,K5;3)", plan.lex_to("gr r=3 targets=K5,K5", "gr r=3 targets=K4,K5", "K5,K5,K5,K7"), 2755);
    plan.row("Square3 on gr(K4,K4,K4;3) >= 56", rule_square3(plan.need("gr r=3 targets=K4,K4,K4")), 3026);
    plan.row("LexExooRad on gr(K4,K6;3) >= 58 twice", plan.lex_to("gr r=3 targets=K4,K6", "gr r=3 targets=K4,K6", "K4,K6,K6,K7"), 3250);
    plan.row("LexExooRad on gr(K4,K6;3) >= 58 twice", plan.lex_to("gr r=3 targets=K4,K6", "gr r=3 targets=K4,K6", "K4,K4,K6,K11"), 3250);
    plan.row("LexExooRad on gr(K5,K5;3), gr(K4,K6;3)", plan.lex_to("gr r=3 targets=K5,K5", "gr r=3 targets=K4,K6", "K4,K5,K5,K11"), 4618);
    // No disjoint split reaches K4,K5,K6,K7; overlapping the K5 and K6 slots
    // gives gr(K3,K5,K6,K7;3), and K3 is contained in K4.
    // A slot padded on both sides is a color nobody may use.
    const LexAlignment overlap{{0, -1}, {1, 1}, {-1, -1}, {-1, 0}};
    plan.row("LexExooRad on gr(K5,K5;3), gr(K4,K6;3), then K3->K4",
             plan.weaken(rule_lex(plan.need("gr r=3 targets=K5,K5"), plan.need("gr r=3 targets=K4,K6"), overlap), "K3", "K4"), 4618,
             "overlapping alignment plus target weakening");
    plan.row("LexExooRad on gr(K5,K5;3), gr(K4,K6;3)", plan.lex_to("gr r=3 targets=K5,K5", "gr r=3 targets=K4,K6", "K5,K5,K6,K7"), 4618);
    plan.row("LexExooRad on gr(K5,K5;3) >= 82 twice", plan.lex_to("gr r=3 targets=K5,K5", "gr r=3 targets=K5,K5", "K5,K5,K5,K9"), 6565,
             "published value differs from (82-1)(82-1)+1");
    plan.row("Square3 on gr(K5,K5,K5;3) >= 163", rule_square3(plan.need("gr r=3 targets=K5,K5,K5")), 26245);

    plan.row("Square4 on gr(K5,K5;4) >= 34", rule_square4(plan.need("gr r=4 targets=K5,K5")), 1090);
    auto song = rule_song_step(plan.need("R r=4 targets=K5,K5"));
    plan.row("SongStep on R(K5,K5;4) >= 34", song.empty() ? std::nullopt : std::optional<BoundRecord>(song.front()), 67);
    cross_fill(plan.reg);
    plan.row("Square4 on gr(K5,K6;4) >= 67", rule_square4(plan.need("gr r=4 targets=K5,K6")), 4357);

    auto k5e = rule_square3(plan.need("gr r=3 targets=K5-e,K5-e"));
    plan.row("Square3 on gr(K5-e,K5-e;3) >= 14", k5e, 170);
    plan.row("K4->K5-e twice on gr(K4,K4,K5-e,K5-e;3)", plan.weaken(plan.weaken(k5e, "K4", "K5-e"), "K4", "K5-e"), 170);
    plan.row("Square3 (Ramsey form) on R(K5,K5,K5,K5;3) >= 131073", rule_square3(plan.need("R r=3 targets=K5,K5,K5,K5")), 17179869185ull);
    return plan.rows;
}

std::string render_table(const std::vector<TableRow>& rows) {
    std::size_t wl = 0, wb = 0;
    std::vector<std::string> bounds;
    for (const auto& r : rows) {
        std::string b = "(underivable)";
        if (r.record) {
            const auto key = r.record->key();
            b = to_string(key.kind) + "(" + format_avoid_list(key.targets) + ";" + std::to_string(key.uniformity) + ") >= " + std::to_string(r.record->value);
        }
        wl = std::max(wl, r.label.size());
        wb = std::max(wb, b.size());
        bounds.push_back(std::move(b));
    }
    std::ostringstream out;
    out << std::left;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        out << std::setw(static_cast<int>(wl)) << r.label << "  " << std::setw(static_cast<int>(wb)) << bounds[i] << "  published "
            << std::setw(12) << r.published << (r.match ? "  match" : "  MISMATCH");
        if (!r.note.empty()) out << "  (" << r.note << ")";
        out << "\n";
    }
    out << "\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        out << "row=" << i + 1 << " match=" << (r.match ? "yes" : "no") << " published=" << r.published << " ";
        out << (r.record ? r.record->to_line() : std::string("underivable")) << "\n";
    }
    return out.str();
}

}  // namespace grhc
