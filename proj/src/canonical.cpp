#include "gsys/canonical.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <unordered_map>

#include "gsys/digest.hpp"

namespace gsys {

std::string Certificate::hash_hex() const { return fnv1a64_hex(bytes); }

std::string Certificate::hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 0xF]);
    }
    return out;
}

namespace {

constexpr std::uint32_t kSelf = 0xFFFFFFFFu;

void append_u32(std::string& out, std::uint32_t v) {
    out.push_back(static_cast<char>((v >> 24) & 0xFF));
    out.push_back(static_cast<char>((v >> 16) & 0xFF));
    out.push_back(static_cast<char>((v >> 8) & 0xFF));
    out.push_back(static_cast<char>(v & 0xFF));
}

std::size_t color_count(const std::vector<std::uint32_t>& colors) {
    return colors.empty() ? 0 : static_cast<std::size_t>(*std::max_element(colors.begin(), colors.end())) + 1;
}

/// Renumbers arbitrary keys to contiguous color ids, ordered by key value so
/// the ids are comparable across systems.
std::vector<std::uint32_t> normalize_keys(const std::vector<std::uint64_t>& keys) {
    std::vector<std::uint64_t> sorted(keys);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::uint32_t> colors(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) {
        colors[i] = static_cast<std::uint32_t>(
            std::lower_bound(sorted.begin(), sorted.end(), keys[i]) - sorted.begin());
    }
    return colors;
}

struct MeasureData {
    std::size_t arity = 0;
    std::vector<std::uint32_t> values;        // raw sign indices in rank order
    std::vector<std::uint32_t> desc;          // refinement descriptor per rank
    std::vector<std::uint32_t> sorted_index;  // value mode: sign index -> sorted position
    std::vector<std::string> sorted_signs;    // value mode
    std::uint32_t realized = 0;
};

/// Iterated color refinement over all measure positions, then backtracking
/// over the refined color classes, keeping the lexicographically smallest
/// full-table encoding. Complete (no automorphism pruning), so certificate
/// equality decides isomorphism exactly; intended for desk-scale systems.
struct Engine {
    IsoMode mode = IsoMode::value_preserving;
    std::size_t n = 0;
    std::vector<MeasureData> measures;

    std::string best_tables;
    std::vector<std::size_t> best_perm;
    bool have_best = false;

    void build(const System& s) {
        if (s.has_nested()) {
            throw Error(ErrorKind::NestedSystem,
                        "canonical forms cover flat systems only; flatten nested vertices first");
        }
        n = s.vertices().size();
        measures.reserve(s.measures().size());
        for (const Quantity& q : s.measures()) {
            MeasureData md;
            md.arity = q.arity();
            md.values = q.table();
            std::vector<std::uint32_t> fiber(q.signs().size(), 0);
            for (std::uint32_t v : md.values) ++fiber[v];
            md.realized = static_cast<std::uint32_t>(
                std::count_if(fiber.begin(), fiber.end(), [](std::uint32_t c) { return c > 0; }));
            md.desc.reserve(md.values.size());
            if (mode == IsoMode::value_preserving) {
                md.sorted_signs = q.signs().ids();
                std::sort(md.sorted_signs.begin(), md.sorted_signs.end());
                md.sorted_index.resize(q.signs().size());
                for (std::size_t i = 0; i < q.signs().size(); ++i) {
                    md.sorted_index[i] = static_cast<std::uint32_t>(
                        std::lower_bound(md.sorted_signs.begin(), md.sorted_signs.end(),
                                         q.signs().id(i)) -
                        md.sorted_signs.begin());
                }
                for (std::uint32_t v : md.values) md.desc.push_back(md.sorted_index[v]);
            } else {
                // Sign identity is not invariant under relabelling; fiber
                // sizes are.
                for (std::uint32_t v : md.values) md.desc.push_back(fiber[v]);
            }
            measures.push_back(std::move(md));
        }
    }

    std::vector<std::uint32_t> initial_colors() const {
        std::vector<std::vector<std::array<std::uint32_t, 3>>> items(n);
        std::vector<std::size_t> idx;
        for (std::size_t mi = 0; mi < measures.size(); ++mi) {
            const MeasureData& md = measures[mi];
            idx.assign(md.arity, 0);
            for (std::size_t rank = 0; rank < md.values.size(); ++rank) {
                tuple_unrank(rank, n, idx);
                for (std::size_t j = 0; j < md.arity; ++j) {
                    items[idx[j]].push_back({static_cast<std::uint32_t>(mi),
                                             static_cast<std::uint32_t>(j), md.desc[rank]});
                }
            }
        }
        std::map<std::vector<std::array<std::uint32_t, 3>>, std::uint32_t> ids;
        for (auto& v : items) {
            std::sort(v.begin(), v.end());
            ids.emplace(v, 0);
        }
        std::uint32_t next = 0;
        for (auto& [sig, id] : ids) id = next++;
        std::vector<std::uint32_t> colors(n);
        for (std::size_t v = 0; v < n; ++v) colors[v] = ids.at(items[v]);
        return colors;
    }

    std::vector<std::uint32_t> refine(std::vector<std::uint32_t> colors) const {
        using Item = std::vector<std::uint32_t>;
        std::vector<std::size_t> idx;
        while (true) {
            const std::size_t before = color_count(colors);
            std::vector<std::vector<Item>> items(n);
            for (std::size_t mi = 0; mi < measures.size(); ++mi) {
                const MeasureData& md = measures[mi];
                idx.assign(md.arity, 0);
                for (std::size_t rank = 0; rank < md.values.size(); ++rank) {
                    tuple_unrank(rank, n, idx);
                    for (std::size_t j = 0; j < md.arity; ++j) {
                        Item item;
                        item.reserve(2 + md.arity);
                        item.push_back(static_cast<std::uint32_t>(mi));
                        item.push_back(md.desc[rank]);
                        for (std::size_t c = 0; c < md.arity; ++c) {
                            item.push_back(idx[c] == idx[j] ? kSelf : colors[idx[c]]);
                        }
                        items[idx[j]].push_back(std::move(item));
                    }
                }
            }
            using Signature = std::pair<std::uint32_t, std::vector<Item>>;
            std::map<Signature, std::uint32_t> ids;
            std::vector<Signature> sigs;
            sigs.reserve(n);
            for (std::size_t v = 0; v < n; ++v) {
                std::sort(items[v].begin(), items[v].end());
                sigs.emplace_back(colors[v], std::move(items[v]));
                ids.emplace(sigs.back(), 0);
            }
            std::uint32_t next = 0;
            for (auto& [sig, id] : ids) id = next++;
            for (std::size_t v = 0; v < n; ++v) colors[v] = ids.at(sigs[v]);
            if (color_count(colors) == before) return colors;
        }
    }

    void search(std::vector<std::uint32_t> colors) {
        colors = refine(std::move(colors));
        const std::size_t cc = color_count(colors);
        if (cc == n) {
            std::vector<std::size_t> perm(n);
            for (std::size_t v = 0; v < n; ++v) perm[colors[v]] = v;
            std::string candidate = encode_tables(perm);
            if (!have_best || candidate < best_tables) {
                best_tables = std::move(candidate);
                best_perm = std::move(perm);
                have_best = true;
            }
            return;
        }
        std::vector<std::size_t> sizes(cc, 0);
        for (std::uint32_t c : colors) ++sizes[c];
        std::size_t target = 0;
        for (std::size_t c = 1; c < cc; ++c) {
            if (sizes[c] > sizes[target]) target = c;
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (colors[v] != target) continue;
            std::vector<std::uint64_t> keys(n);
            for (std::size_t w = 0; w < n; ++w) {
                keys[w] = static_cast<std::uint64_t>(colors[w]) * 2 + (w == v ? 0 : 1);
            }
            search(normalize_keys(keys));
        }
    }

    std::string encode_tables(const std::vector<std::size_t>& perm) const {
        std::string out;
        std::vector<std::size_t> idx;
        std::vector<std::size_t> old_idx;
        for (const MeasureData& md : measures) {
            idx.assign(md.arity, 0);
            old_idx.assign(md.arity, 0);
            std::unordered_map<std::uint32_t, std::uint32_t> relabel;
            for (std::size_t rank = 0; rank < md.values.size(); ++rank) {
                tuple_unrank(rank, n, idx);
                for (std::size_t c = 0; c < md.arity; ++c) old_idx[c] = perm[idx[c]];
                const std::uint32_t v = md.values[tuple_rank(old_idx, n)];
                std::uint32_t encoded;
                if (mode == IsoMode::value_preserving) {
                    encoded = md.sorted_index[v];
                } else {
                    auto [it, inserted] =
                        relabel.try_emplace(v, static_cast<std::uint32_t>(relabel.size()));
                    (void)inserted;
                    encoded = it->second;
                }
                append_u32(out, encoded);
            }
        }
        return out;
    }

    std::string header() const {
        std::string h = "GSC1";
        h.push_back(mode == IsoMode::value_preserving ? 'v' : 'r');
        append_u32(h, static_cast<std::uint32_t>(n));
        append_u32(h, static_cast<std::uint32_t>(measures.size()));
        for (const MeasureData& md : measures) {
            append_u32(h, static_cast<std::uint32_t>(md.arity));
            if (mode == IsoMode::value_preserving) {
                append_u32(h, static_cast<std::uint32_t>(md.sorted_signs.size()));
                for (const std::string& s : md.sorted_signs) {
                    append_u32(h, static_cast<std::uint32_t>(s.size()));
                    h += s;
                }
            } else {
                append_u32(h, md.realized);
            }
        }
        return h;
    }
};

struct CanonResult {
    Certificate cert;
    std::vector<std::size_t> ordering;  // ordering[pos] = original vertex index
};

CanonResult canonical_with_ordering(const System& s, IsoMode mode) {
    Engine engine;
    engine.mode = mode;
    engine.build(s);
    engine.search(engine.initial_colors());
    return {Certificate{engine.header() + engine.best_tables}, std::move(engine.best_perm)};
}

}  // namespace

Certificate canonical_form(const System& s, IsoMode mode) {
    return canonical_with_ordering(s, mode).cert;
}

std::optional<Isomorphism> find_isomorphism(const System& sa, const System& sb, IsoMode mode) {
    if (sa.has_nested() || sb.has_nested()) {
        throw Error(ErrorKind::NestedSystem,
                    "isomorphism search covers flat systems only; flatten nested vertices first");
    }
    check_shape_compatible(sa, sb, mode);
    const Universe& va = sa.vertices();
    const Universe& vb = sb.vertices();
    if (va.size() != vb.size()) return std::nullopt;
    const CanonResult ca = canonical_with_ordering(sa, mode);
    const CanonResult cb = canonical_with_ordering(sb, mode);
    if (!(ca.cert == cb.cert)) return std::nullopt;

    const std::size_t n = va.size();
    std::vector<std::size_t> to_b(n);
    for (std::size_t pos = 0; pos < n; ++pos) to_b[ca.ordering[pos]] = cb.ordering[pos];
    std::vector<std::pair<std::string, std::string>> pairs;
    pairs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) pairs.emplace_back(va.id(i), vb.id(to_b[i]));

    Isomorphism iso{VertexMap(std::move(pairs)), {}};
    iso.sign_maps.reserve(sa.measures().size());
    std::vector<std::size_t> idx;
    std::vector<std::size_t> mapped_idx;
    for (std::size_t m = 0; m < sa.measures().size(); ++m) {
        const Quantity& qa = sa.measures()[m];
        const Quantity& qb = sb.measures()[m];
        constexpr std::uint32_t unset = 0xFFFFFFFFu;
        std::vector<std::uint32_t> image(qa.signs().size(), unset);
        idx.assign(qa.arity(), 0);
        mapped_idx.assign(qa.arity(), 0);
        for (std::size_t rank = 0; rank < qa.tuple_count(); ++rank) {
            tuple_unrank(rank, n, idx);
            for (std::size_t c = 0; c < qa.arity(); ++c) mapped_idx[c] = to_b[idx[c]];
            const std::uint32_t from = qa.sign_index_at(rank);
            const std::uint32_t to = qb.sign_index_at(tuple_rank(mapped_idx, n));
            if (image[from] == unset) {
                image[from] = to;
            } else if (image[from] != to) {
                throw std::logic_error("certificate equality produced an inconsistent sign map");
            }
        }
        std::vector<std::pair<std::string, std::string>> sign_map;
        for (std::size_t s = 0; s < qa.signs().size(); ++s) {
            if (image[s] != unset) sign_map.emplace_back(qa.signs().id(s), qb.signs().id(image[s]));
        }
        iso.sign_maps.push_back(std::move(sign_map));
    }
    return iso;
}

StructureAttributes structure_attributes(const System& s) {
    StructureAttributes a;
    a.vertex_count = s.vertices().size();
    const std::size_t n = a.vertex_count;
    std::vector<std::map<std::string, std::size_t>> profile_items(n);
    std::vector<std::size_t> idx;
    for (std::size_t mi = 0; mi < s.measures().size(); ++mi) {
        const Quantity& q = s.measures()[mi];
        a.measure_arities.push_back(q.arity());
        a.realized_sign_counts.push_back(q.realized_sign_count());
        a.induced_block_counts.push_back(induced_partition(q).block_count());
        idx.assign(q.arity(), 0);
        for (std::size_t rank = 0; rank < q.tuple_count(); ++rank) {
            tuple_unrank(rank, n, idx);
            for (std::size_t j = 0; j < q.arity(); ++j) {
                std::string key = "m" + std::to_string(mi) + "[" + std::to_string(j) +
                                  "]=" + q.sign_at(rank);
                ++profile_items[idx[j]][key];
            }
        }
    }
    a.vertex_profiles.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
        std::string profile;
        for (const auto& [key, count] : profile_items[v]) {
            if (!profile.empty()) profile.push_back(';');
            profile += key + "*" + std::to_string(count);
        }
        a.vertex_profiles.push_back(std::move(profile));
    }
    std::sort(a.vertex_profiles.begin(), a.vertex_profiles.end());
    if (!s.has_nested()) {
        a.certificate_hash = canonical_form(s, IsoMode::value_preserving).hash_hex();
    }
    return a;
}

}  // namespace gsys
