#include "gsys/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gsys/canonical.hpp"
#include "gsys/correspondence.hpp"
#include "gsys/digest.hpp"
#include "gsys/document.hpp"

namespace gsys::cli {

namespace {

struct Report {
    std::string echo;
    std::vector<std::string> notes;     // "# ..." lines after the echo
    std::vector<std::string> inputs;    // "path fnv1a64=..."
    std::vector<std::string> payload;
    std::vector<std::string> warnings;

    void emit(std::ostream& out) const {
        out << "# gsys " << echo << "\n";
        for (const std::string& n : notes) out << "# " << n << "\n";
        for (const std::string& i : inputs) out << "# input " << i << "\n";
        for (const std::string& line : payload) out << line << "\n";
        out << "# warnings " << warnings.size() << "\n";
        for (const std::string& w : warnings) out << "# warning: " << w << "\n";
    }
};

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw Error(ErrorKind::UsageError, "cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw Error(ErrorKind::UsageError, "cannot write '" + path + "'");
    }
    f << content;
}

struct FileDocument {
    SystemDocument doc;
    LoadedDocument loaded;
};

FileDocument load_file(const std::string& path, std::size_t cap, Report& report) {
    const std::string bytes = slurp(path);
    report.inputs.push_back(path + " fnv1a64=" + fnv1a64_hex(bytes));
    FileDocument fd;
    fd.doc = parse_system_document(bytes);
    fd.loaded = load_document(fd.doc, cap);
    return fd;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string tuple_str(const Universe& u, std::size_t rank, std::size_t arity) {
    std::vector<std::size_t> idx(arity);
    tuple_unrank(rank, u.size(), idx);
    std::string s = "(";
    for (std::size_t i = 0; i < arity; ++i) {
        if (i) s += ",";
        s += u.id(idx[i]);
    }
    s += ")";
    return s;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string size_list(const std::vector<std::size_t>& values) {
    std::string s = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(values[i]);
    }
    s += "]";
    return s;
}

void describe_quantity(const Quantity& q, Report& report) {
    const Classification c = classify(q);
    report.payload.push_back("arity=" + std::to_string(q.arity()) +
                             " declared_signs=" + std::to_string(c.declared_count) +
                             " realized=" + std::to_string(c.element_count) +
                             " blocks=" + std::to_string(induced_partition(q).block_count()));
    report.payload.push_back("constant=" + bool_str(c.is_constant) + " tag=" + bool_str(c.is_tag));
}

void emit_record(const Quantity& q, Report& report) {
    SystemDocument doc;
    doc.universe = q.universe().ids();
    doc.quantities.push_back(to_record(q));
    // single-line record for grep-ability; --out writes the full document
    std::string json = write_system_document(doc);
    report.payload.push_back("record: " + std::string(nlohmann::ordered_json::parse(json)
                                                          .at("quantities")[0]
                                                          .dump()));
}

void maybe_write(const std::optional<std::string>& out_path, const Quantity& q) {
    if (!out_path) return;
    SystemDocument doc;
    doc.universe = q.universe().ids();
    doc.quantities.push_back(to_record(q));
    write_file(*out_path, write_system_document(doc));
}

void relate_lines(const Quantity& left, const Quantity& right, SignScope scope, Report& report) {
    const QuantityRelation r = relate(left, right, scope);
    report.payload.push_back(
        "relate " + left.name() + " " + right.name() +
        ": scope=" + (scope == SignScope::realized ? "realized" : "declared"));
    report.payload.push_back("left_constant=" + bool_str(r.left_constant) +
                             " right_constant=" + bool_str(r.right_constant));
    report.payload.push_back("independent=" + bool_str(r.independent));
    report.payload.push_back("left_determines_right=" + bool_str(r.left_determines_right));
    report.payload.push_back("right_determines_left=" + bool_str(r.right_determines_left));
    report.payload.push_back("equivalent=" + bool_str(r.equivalent));
}

SystemPtr pick_system(const LoadedDocument& loaded, const std::string& name) {
    return loaded.system(name);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite quantities, partitions, correspondences, and systems"};
    app.name("gsys");
    app.require_subcommand(1);

    std::size_t size_cap = kDefaultSizeCap;
    std::optional<std::uint64_t> seed;
    app.add_option("--size-cap", size_cap, "dense-table size cap (tuples)");
    app.add_option("--seed", seed,
                   "reserved for randomized harnesses; core algorithms are deterministic");

    int rc = 0;
    Report report;
    report.echo = join(args, " ");

    auto finish = [&](int code) {
        if (seed) report.notes.push_back("seed " + std::to_string(*seed));
        report.emit(out);
        rc = code;
    };

    // validate
    {
        auto* cmd = app.add_subcommand("validate", "parse and validate a system document");
        auto doc_path = std::make_shared<std::string>();
        cmd->add_option("doc", *doc_path, "document path")->required();
        cmd->callback([&, doc_path] {
            FileDocument fd = load_file(*doc_path, size_cap, report);
            report.payload.push_back("document valid");
            report.payload.push_back("universe size=" + std::to_string(fd.doc.universe.size()));
            report.payload.push_back("quantities " + std::to_string(fd.doc.quantities.size()));
            for (const Quantity& q : fd.loaded.quantities) {
                report.payload.push_back("  " + q.name() + " arity=" + std::to_string(q.arity()) +
                                         " signs=" + std::to_string(q.signs().size()));
            }
            report.payload.push_back("systems " + std::to_string(fd.doc.systems.size()));
            for (const SystemRecord& s : fd.doc.systems) {
                report.payload.push_back("  " + s.name + " measures=" + join(s.measures, ",") +
                                         " strict=" + bool_str(s.strict));
            }
            finish(0);
        });
    }

    // partition
    {
        auto* cmd = app.add_subcommand("partition", "induced partition of a quantity");
        auto doc_path = std::make_shared<std::string>();
        auto qname = std::make_shared<std::string>();
        cmd->add_option("doc", *doc_path, "document path")->required();
        cmd->add_option("quantity", *qname, "quantity name")->required();
        cmd->callback([&, doc_path, qname] {
            FileDocument fd = load_file(*doc_path, size_cap, report);
            const Quantity& q = fd.loaded.quantity(*qname);
            const Partition p = induced_partition(q);
            report.payload.push_back("partition of " + q.name() +
                                     ": domain=" + std::to_string(p.domain_size()) +
                                     " blocks=" + std::to_string(p.block_count()));
            const auto blocks = p.blocks();
            for (std::size_t b = 0; b < blocks.size(); ++b) {
                std::string line = "block " + std::to_string(b) + " [" +
                                   q.sign_at(blocks[b].front()) + "]:";
                for (std::size_t rank : blocks[b]) {
                    line += " " + tuple_str(q.universe(), rank, q.arity());
                }
                report.payload.push_back(line);
            }
            finish(0);
        });
    }

    // classify
    {
        auto* cmd = app.add_subcommand("classify", "classification report for a quantity");
        auto doc_path = std::make_shared<std::string>();
        auto qname = std::make_shared<std::string>();
        cmd->add_option("doc", *doc_path, "document path")->required();
        cmd->add_option("quantity", *qname, "quantity name")->required();
        cmd->callback([&, doc_path, qname] {
            FileDocument fd = load_file(*doc_path, size_cap, report);
            const Quantity& q = fd.loaded.quantity(*qname);
            const Classification c = classify(q);
            report.payload.push_back("classify " + q.name() + ": kind=" +
                                     std::string(to_string(c.kind)) +
                                     " arity=" + std::to_string(q.arity()));
            report.payload.push_back(
                "constant=" + bool_str(c.is_constant) + " degenerate=" + bool_str(c.degenerate) +
                " tag=" + bool_str(c.is_tag) + " tag_on_realized=" + bool_str(c.tag_on_realized));
            report.payload.push_back("signs declared=" + std::to_string(c.declared_count) +
                                     " realized=" + std::to_string(c.element_count));
            report.payload.push_back(
                "blocks=" + std::to_string(induced_partition(q).block_count()));
            finish(0);
        });
    }

    // relate
    {
        auto* cmd = app.add_subcommand("relate", "quantity-level relation report");
        auto doc_path = std::make_shared<std::string>();
        auto left = std::make_shared<std::string>();
        auto right = std::make_shared<std::string>();
        auto all = std::make_shared<bool>(false);
        auto strict_signs = std::make_shared<bool>(false);
        cmd->add_option("doc", *doc_path, "document path")->required();
        cmd->add_option("left", *left, "left quantity");
        cmd->add_option("right", *right, "right quantity");
        cmd->add_flag("--all", *all, "relate every same-arity pair");
        cmd->add_flag("--strict-signs", *strict_signs,
                      "quantify independence over declared signs");
        cmd->callback([&, doc_path, left, right, all, strict_signs] {
            FileDocument fd = load_file(*doc_path, size_cap, report);
            const SignScope scope = *strict_signs ? SignScope::declared : SignScope::realized;
            if (*all) {
                const auto& qs = fd.loaded.quantities;
                for (std::size_t i = 0; i < qs.size(); ++i) {
                    for (std::size_t j = i + 1; j < qs.size(); ++j) {
                        if (qs[i].arity() != qs[j].arity()) {
                            report.payload.push_back("relate " + qs[i].name() + " " +
                                                     qs[j].name() + ": skipped (arity mismatch)");
                            continue;
                        }
                        relate_lines(qs[i], qs[j], scope, report);
                    }
                }
            } else {
                if (left->empty() || right->empty()) {
                    throw Error(ErrorKind::UsageError, "relate needs two quantities or --all");
                }
                relate_lines(fd.loaded.quantity(*left), fd.loaded.quantity(*right), scope,
                             report);
            }
            finish(0);
        });
    }

    // meet / join
    for (const bool is_meet : {true, false}) {
        auto* cmd = app.add_subcommand(is_meet ? "meet" : "join",
                                       is_meet ? "greatest lower bound of two quantities"
                                               : "least upper bound of two quantities");
        auto doc_path = std::make_shared<std::string>();
        auto left = std::make_shared<std::string>();
        auto right = std::make_shared<std::string>();
        auto out_path = std::make_shared<std::optional<std::string>>();
        cmd->add_option("doc", *doc_path, "document path")->required();
        cmd->add_option("left", *left, "left quantity")->required();
        cmd->add_option("right", *right, "right quantity")->required();
        cmd->add_option("--out", *out_path, "write the result as a document");
        cmd->callback([&, doc_path, left, right, out_path, is_meet] {
            FileDocument fd = load_file(*doc_path, size_cap, report);
            const Quantity& l = fd.loaded.quantity(*left);
            const Quantity& r = fd.loaded.quantity(*right);
            const Quantity result =
                is_meet ? quantity_meet(l, r, size_cap) : quantity_join(l, r);
            report.payload.push_back(std::string(is_meet ? "meet " : "join ") + l.name() + " " +
                                     r.name() + " -> " + result.name());
            describe_quantity(result, report);
            emit_record(result, report);
            maybe_write(*out_path, result);
            finish(0);
        });
    }

    // lift
    {
        auto* cmd = app.add_subcommand("lift", "lift a quantity to a larger arity");
        auto doc_path = std::make_shared<std::string>();
        auto qname = std::make_shared<std::string>();
        auto arity = std::make_shared<std::size_t>(0);
        auto coords = std::make_shared<std::vector<std::size_t>>();
        auto out_path = std::make_shared<std::optional<std::string>>();
        cmd->add_option("doc", *doc_path, "document path")->required();
        cmd->add_option("quantity", *qname, "quantity name")->required();
        cmd->add_option("--arity", *arity, "target arity")->required();
        cmd->add_option("--coords", *coords, "coordinate positions (default: first k)")
            ->delimiter(',');
        cmd->add_option("--out", *out_path, "write the result as a document");
        cmd->callback([&, doc_path, qname, arity, coords, out_path] {
            FileDocument fd = load_file(*doc_path, size_cap, report);
            const Quantity& q = fd.loaded.quantity(*qname);
            std::vector<std::size_t> positions = *coords;
            if (positions.empty()) {
                positions.resize(q.arity());
                for (std::size_t i = 0; i < positions.size(); ++i) positions[i] = i;
            }
            const Quantity result = lift(q, *arity, positions, size_cap);
            std::vector<std::string> pos_str;
            pos_str.reserve(positions.size());
            for (std::size_t p : positions) pos_str.push_back(std::to_string(p));
            report.payload.push_back("lift " + q.name() + " arity=" + std::to_string(*arity) +
                                     " coords=" + join(pos_str, ","));
            describe_quantity(result, report);
            emit_record(result, report);
            maybe_write(*out_path, result);
            finish(0);
        });
    }

    // compose
    {
        auto* cmd = app.add_subcommand(
            "compose", "compose an inner quantity with an outer quantity on its sign set");
        auto doc_a = std::make_shared<std::string>();
        auto inner_name = std::make_shared<std::string>();
        auto doc_b = std::make_shared<std::string>();
        auto outer_name = std::make_shared<std::string>();
        auto out_path = std::make_shared<std::optional<std::string>>();
        cmd->add_option("doc_inner", *doc_a, "document holding the inner quantity")->required();
        cmd->add_option("inner", *inner_name, "inner quantity name")->required();
        cmd->add_option("doc_outer", *doc_b,
                        "document whose universe is the inner sign set")->required();
        cmd->add_option("outer", *outer_name, "outer quantity name")->required();
        cmd->add_option("--out", *out_path, "write the result as a document");
        cmd->callback([&, doc_a, inner_name, doc_b, outer_name, out_path] {
            FileDocument fa = load_file(*doc_a, size_cap, report);
            FileDocument fb = load_file(*doc_b, size_cap, report);
            const Quantity& inner = fa.loaded.quantity(*inner_name);
            const Quantity& outer = fb.loaded.quantity(*outer_name);
            const Quantity result = compose(inner, outer, size_cap);
            report.payload.push_back("compose inner=" + inner.name() + " outer=" + outer.name() +
                                     " -> " + result.name());
            describe_quantity(result, report);
            emit_record(result, report);
            maybe_write(*out_path, result);
            finish(0);
        });
    }

    // complete
    {
        auto* cmd = app.add_subcommand("complete", "minimal complete sets among the quantities");
        auto doc_path = std::make_shared<std::string>();
        auto arity = std::make_shared<std::size_t>(1);
        auto max_size = std::make_shared<std::size_t>(4);
        cmd->add_option("doc", *doc_path, "document path")->required();
        cmd->add_option("--arity", *arity, "arity of the pool")->required();
        cmd->add_option("--max-size", *max_size, "largest subset size");
        cmd->callback([&, doc_path, arity, max_size] {
            FileDocument fd = load_file(*doc_path, size_cap, report);
            std::vector<Quantity> pool;
            for (const Quantity& q : fd.loaded.quantities) {
                if (q.arity() == *arity) pool.push_back(q);
            }
            std::vector<std::string> pool_names;
            pool_names.reserve(pool.size());
            for (const Quantity& q : pool) pool_names.push_back(q.name());
            report.payload.push_back("complete arity=" + std::to_string(*arity) +
                                     " max_size=" + std::to_string(*max_size) +
                                     " pool=" + std::to_string(pool.size()));
            if (!pool.empty()) {
                report.payload.push_back("pool: " + join(pool_names, " "));
            }
            std::size_t found = 0;
            if (!pool.empty()) {
                for (const auto& members : find_complete_sets(pool, *arity, *max_size)) {
                    std::vector<std::string> names;
                    names.reserve(members.size());
                    for (std::size_t i : members) names.push_back(pool[i].name());
                    report.payload.push_back("set {" + join(names, ", ") + "}");
                    ++found;
                }
            }
            report.payload.push_back("found=" + std::to_string(found));
            finish(found > 0 ? 0 : 1);
        });
    }

    // restrict
    {
        auto* cmd = app.add_subcommand("restrict", "restrict a document to a sub-universe");
        auto doc_path = std::make_shared<std::string>();
        auto vertices = std::make_shared<std::vector<std::string>>();
        auto out_path = std::make_shared<std::optional<std::string>>();
        cmd->add_option("doc", *doc_path, "document path")->required();
        cmd->add_option("--vertices", *vertices, "objects to keep")->required()->delimiter(',');
        cmd->add_option("--out", *out_path, "write the restricted document");
        cmd->callback([&, doc_path, vertices, out_path] {
            FileDocument fd = load_file(*doc_path, size_cap, report);
            const Universe sub = make_universe(*vertices);
            std::vector<Quantity> restricted;
            restricted.reserve(fd.loaded.quantities.size());
            for (const Quantity& q : fd.loaded.quantities) {
                restricted.push_back(restrict(q, sub));
            }
            const SystemDocument out_doc = to_document(sub, restricted, fd.doc.systems);
            report.payload.push_back("restrict universe=" + std::to_string(sub.size()) +
                                     " quantities=" + std::to_string(restricted.size()));
            const std::string text = write_system_document(out_doc);
            if (*out_path) {
                write_file(**out_path, text);
                report.payload.push_back("wrote " + **out_path);
            } else {
                std::istringstream lines(text);
                for (std::string line; std::getline(lines, line);) {
                    report.payload.push_back(line);
                }
            }
            finish(0);
        });
    }

    // iso
    {
        auto* cmd = app.add_subcommand("iso", "decide isomorphism of two systems");
        auto doc_a = std::make_shared<std::string>();
        auto doc_b = std::make_shared<std::string>();
        auto relabel = std::make_shared<bool>(false);
        auto system_a = std::make_shared<std::string>();
        auto system_b = std::make_shared<std::string>();
        cmd->add_option("A", *doc_a, "first document")->required();
        cmd->add_option("B", *doc_b, "second document")->required();
        cmd->add_flag("--relabel-signs", *relabel, "match values up to sign bijections");
        cmd->add_option("--system-a", *system_a, "system name in A (default: first or implicit)");
        cmd->add_option("--system-b", *system_b, "system name in B (default: first or implicit)");
        cmd->callback([&, doc_a, doc_b, relabel, system_a, system_b] {
            FileDocument fa = load_file(*doc_a, size_cap, report);
            FileDocument fb = load_file(*doc_b, size_cap, report);
            const SystemPtr sa = pick_system(fa.loaded, *system_a);
            const SystemPtr sb = pick_system(fb.loaded, *system_b);
            const IsoMode mode =
                *relabel ? IsoMode::sign_relabelling : IsoMode::value_preserving;
            report.payload.push_back(std::string("iso mode=") +
                                     (*relabel ? "relabel" : "value"));
            const auto iso = find_isomorphism(*sa, *sb, mode);
            report.payload.push_back("isomorphic=" + bool_str(iso.has_value()));
            if (iso) {
                std::string line = "map";
                for (const auto& [from, to] : iso->vertex_map.pairs()) {
                    line += " " + from + "->" + to;
                }
                report.payload.push_back(line);
                for (std::size_t m = 0; m < iso->sign_maps.size(); ++m) {
                    std::string signs = "signs[" + std::to_string(m) + "]";
                    for (const auto& [from, to] : iso->sign_maps[m]) {
                        signs += " " + from + "->" + to;
                    }
                    report.payload.push_back(signs);
                }
            }
            finish(iso ? 0 : 1);
        });
    }

    // canon
    {
        auto* cmd = app.add_subcommand("canon", "canonical certificate of a system");
        auto doc_path = std::make_shared<std::string>();
        auto relabel = std::make_shared<bool>(false);
        auto system_name = std::make_shared<std::string>();
        cmd->add_option("doc", *doc_path, "document path")->required();
        cmd->add_flag("--relabel-signs", *relabel, "certificate up to sign bijections");
        cmd->add_option("--system", *system_name, "system name (default: first or implicit)");
        cmd->callback([&, doc_path, relabel, system_name] {
            FileDocument fd = load_file(*doc_path, size_cap, report);
            const SystemPtr s = pick_system(fd.loaded, *system_name);
            const IsoMode mode =
                *relabel ? IsoMode::sign_relabelling : IsoMode::value_preserving;
            const Certificate cert = canonical_form(*s, mode);
            report.payload.push_back(std::string("canon mode=") +
                                     (*relabel ? "relabel" : "value"));
            report.payload.push_back("vertices=" + std::to_string(s->vertices().size()) +
                                     " measures=" + std::to_string(s->measures().size()));
            report.payload.push_back("certificate bytes=" + std::to_string(cert.bytes.size()) +
                                     " fnv1a64=" + cert.hash_hex());
            report.payload.push_back("certificate hex=" + cert.hex());
            finish(0);
        });
    }

    // attrs
    {
        auto* cmd = app.add_subcommand("attrs", "structure attributes of a system");
        auto doc_path = std::make_shared<std::string>();
        auto system_name = std::make_shared<std::string>();
        cmd->add_option("doc", *doc_path, "document path")->required();
        cmd->add_option("--system", *system_name, "system name (default: first or implicit)");
        cmd->callback([&, doc_path, system_name] {
            FileDocument fd = load_file(*doc_path, size_cap, report);
            const SystemPtr s = pick_system(fd.loaded, *system_name);
            const StructureAttributes a = structure_attributes(*s);
            report.payload.push_back("attrs vertices=" + std::to_string(a.vertex_count) +
                                     " measures=" + std::to_string(a.measure_arities.size()));
            report.payload.push_back("arities=" + size_list(a.measure_arities));
            report.payload.push_back("realized=" + size_list(a.realized_sign_counts));
            report.payload.push_back("blocks=" + size_list(a.induced_block_counts));
            for (const std::string& profile : a.vertex_profiles) {
                report.payload.push_back("profile " + profile);
            }
            report.payload.push_back("certificate fnv1a64=" + a.certificate_hash);
            finish(0);
        });
    }

    // fd
    {
        auto* cmd = app.add_subcommand(
            "fd", "dependences and minimal complete sets over CSV columns");
        auto csv_path = std::make_shared<std::string>();
        auto key = std::make_shared<std::optional<std::string>>();
        auto max_size = std::make_shared<std::size_t>(4);
        cmd->add_option("csv", *csv_path, "CSV path (header row required)")->required();
        cmd->add_option("--key", *key, "key column providing object ids");
        cmd->add_option("--max-size", *max_size, "largest complete-set size");
        cmd->callback([&, csv_path, key, max_size] {
            const std::string bytes = slurp(*csv_path);
            report.inputs.push_back(*csv_path + " fnv1a64=" + fnv1a64_hex(bytes));
            CsvIngest ingest = ingest_csv(bytes, *key);
            report.warnings = ingest.warnings;
            const LoadedDocument loaded = load_document(ingest.document, size_cap);
            const auto& qs = loaded.quantities;
            report.payload.push_back("fd rows=" + std::to_string(ingest.document.universe.size()) +
                                     " columns=" + std::to_string(qs.size()) +
                                     " key=" + (*key ? **key : "(row index)"));
            std::vector<std::string> names;
            names.reserve(qs.size());
            for (const Quantity& q : qs) names.push_back(q.name());
            report.payload.push_back("quantities: " + join(names, " "));
            for (std::size_t i = 0; i < qs.size(); ++i) {
                for (std::size_t j = i + 1; j < qs.size(); ++j) {
                    const QuantityRelation r = relate(qs[i], qs[j]);
                    report.payload.push_back(
                        "pair " + qs[i].name() + " " + qs[j].name() +
                        ": independent=" + bool_str(r.independent) +
                        " left_determines_right=" + bool_str(r.left_determines_right) +
                        " right_determines_left=" + bool_str(r.right_determines_left) +
                        " equivalent=" + bool_str(r.equivalent));
                }
            }
            std::size_t dependencies = 0;
            for (std::size_t i = 0; i < qs.size(); ++i) {
                for (std::size_t j = 0; j < qs.size(); ++j) {
                    if (i == j) continue;
                    if (is_dependent(qs[i], qs[j])) {
                        report.payload.push_back("dependency " + qs[i].name() + " -> " +
                                                 qs[j].name());
                        ++dependencies;
                    }
                }
            }
            if (dependencies == 0) report.payload.push_back("dependencies none");
            std::size_t found = 0;
            if (!qs.empty()) {
                for (const auto& members : find_complete_sets(qs, 1, *max_size)) {
                    std::vector<std::string> member_names;
                    member_names.reserve(members.size());
                    for (std::size_t i : members) member_names.push_back(qs[i].name());
                    report.payload.push_back("set {" + join(member_names, ", ") + "}");
                    ++found;
                }
            }
            report.payload.push_back("found=" + std::to_string(found));
            finish(0);
        });
    }

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("gsys");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: UsageError: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}

}  // namespace gsys::cli
