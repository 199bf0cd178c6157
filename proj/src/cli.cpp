#include "convseq/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "convseq/catalog.hpp"
#include "convseq/errors.hpp"
#include "convseq/partitions.hpp"
#include "convseq/recurrence.hpp"
#include "convseq/sequence_io.hpp"

namespace convseq::cli {

namespace {

using nlohmann::ordered_json;

enum class OutputFormat { plain, json, csv };

OutputFormat parse_format(const std::string& name) {
    if (name == "plain") return OutputFormat::plain;
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    throw DomainError("unknown format \"" + name + "\"; expected plain, json, or csv");
}

MethodId parse_method_or_fail(const std::string& name) {
    if (auto method = parse_method(name)) return *method;
    std::string known;
    for (MethodId m : kAllMethods) {
        if (!known.empty()) known += ", ";
        known += to_string(m);
    }
    throw DomainError("unknown method \"" + name + "\"; known methods: " + known);
}

std::vector<MethodId> parse_method_list(const std::string& list) {
    std::vector<MethodId> methods;
    std::size_t begin = 0;
    while (begin <= list.size()) {
        std::size_t end = list.find(',', begin);
        if (end == std::string::npos) end = list.size();
        methods.push_back(parse_method_or_fail(list.substr(begin, end - begin)));
        if (end == list.size()) break;
        begin = end + 1;
    }
    return methods;
}

struct GlobalOptions {
    int composition_cap = kDefaultCompositionCap;
    bool stable = false;
};

// "@path" loads a coefficient file, anything else is a catalog name.
// *entry_out is null for file-backed sequences (no value transform).
CoefficientSequence resolve_sequence(const std::string& selector,
                                     const CatalogEntry** entry_out) {
    if (!selector.empty() && selector.front() == '@') {
        if (entry_out) *entry_out = nullptr;
        return load_coefficient_sequence(selector.substr(1));
    }
    const CatalogEntry& found = entry(selector);
    if (entry_out) *entry_out = &found;
    return make_sequence(found);
}

// Rendered into --help so the built-in sequences are discoverable without
// reading source: name, what it computes, and the first valid index.
std::string catalog_help() {
    std::size_t width = 0;
    for (const CatalogEntry& item : catalog()) width = std::max(width, item.name.size());
    std::string text = "Sequences:\n";
    for (const CatalogEntry& item : catalog()) {
        text += "  ";
        text += item.name;
        text.append(width - item.name.size() + 2, ' ');
        text += item.description;
        text += " (";
        text += item.value_label;
        text += ", n >= ";
        text += std::to_string(item.valid_from);
        text += ")\n";
    }
    return text;
}

std::string csv_quote(const std::string& text) {
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

// ---------------------------------------------------------------- compute

struct ComputeArgs {
    std::string seq;
    int from = 0;
    int to = 0;
    std::string method = "partition";
    std::string format = "plain";
};

int cmd_compute(const ComputeArgs& args, const GlobalOptions& global, std::ostream& out) {
    MethodId method = parse_method_or_fail(args.method);
    OutputFormat format = parse_format(args.format);
    if (args.from < 1) {
        throw DomainError("--from must be >= 1 (b_0 = 1 by definition), got " +
                          std::to_string(args.from));
    }
    if (args.to < args.from) {
        throw DomainError("--to = " + std::to_string(args.to) +
                          " is below --from = " + std::to_string(args.from));
    }
    const CatalogEntry* entry = nullptr;
    CoefficientSequence sequence = resolve_sequence(args.seq, &entry);
    EvalOptions options{global.composition_cap, nullptr};

    struct Row {
        int n;
        Rational b;
        Rational value;
    };
    std::vector<Row> rows;
    for (int n = args.from; n <= args.to; ++n) {
        Rational b = reciprocal_term(sequence, n, method, options);
        Rational value = entry ? entry->transform(n, b) : Rational(0);
        rows.push_back({n, std::move(b), std::move(value)});
    }

    switch (format) {
        case OutputFormat::plain:
            for (const Row& row : rows) {
                out << row.n << "  " << format_rational(row.b);
                if (entry) out << "  " << format_rational(row.value);
                out << "  " << to_string(method) << "\n";
            }
            break;
        case OutputFormat::csv:
            out << (entry ? "n,b_n,value,method\n" : "n,b_n,method\n");
            for (const Row& row : rows) {
                out << row.n << ',' << format_rational(row.b);
                if (entry) out << ',' << format_rational(row.value);
                out << ',' << to_string(method) << "\n";
            }
            break;
        case OutputFormat::json: {
            ordered_json doc;
            doc["command"] = "compute";
            doc["sequence"] = sequence.name();
            doc["method"] = std::string(to_string(method));
            doc["rows"] = ordered_json::array();
            for (const Row& row : rows) {
                ordered_json item;
                item["n"] = row.n;
                item["b"] = format_rational(row.b);
                if (entry) item["value"] = format_rational(row.value);
                doc["rows"].push_back(std::move(item));
            }
            out << doc.dump() << "\n";
            break;
        }
    }
    return 0;
}

// ----------------------------------------------------------------- verify

struct VerifyArgs {
    std::string seq;
    int max_n = 0;
    std::string format = "plain";
};

void verify_plain(const std::vector<VerificationReport>& reports,
                  const std::optional<IdentityReport>& identities, bool ok,
                  const GlobalOptions& global, std::ostream& out) {
    for (const VerificationReport& report : reports) {
        for (MethodId method : kAllMethods) {
            if (method == MethodId::recursion) continue;
            int pass = 0, fail = 0, skipped = 0;
            long long time_us = 0;
            for (const MethodCheck& check : report.checks) {
                if (check.method != method) continue;
                time_us += check.elapsed.count();
                switch (check.status) {
                    case CheckStatus::pass: ++pass; break;
                    case CheckStatus::fail: ++fail; break;
                    case CheckStatus::skipped: ++skipped; break;
                }
            }
            out << "verify " << report.sequence << " " << to_string(method)
                << " pass=" << pass << " fail=" << fail << " skipped=" << skipped;
            if (!global.stable) out << " time_us=" << time_us;
            out << "\n";
        }
    }
    for (const VerificationReport& report : reports) {
        for (const MethodCheck& check : report.checks) {
            if (check.status != CheckStatus::fail) continue;
            out << "mismatch " << report.sequence << " n=" << check.n << " "
                << to_string(check.method) << " expected=" << format_rational(check.expected)
                << " got=" << format_rational(check.got) << "\n";
        }
    }
    if (identities) {
        // Aggregate per identity name, preserving first-seen order.
        std::vector<std::string> names;
        for (const IdentityCheck& check : identities->checks) {
            if (std::find(names.begin(), names.end(), check.identity) == names.end()) {
                names.push_back(check.identity);
            }
        }
        for (const std::string& name : names) {
            int pass = 0, fail = 0;
            for (const IdentityCheck& check : identities->checks) {
                if (check.identity != name) continue;
                (check.ok ? pass : fail) += 1;
            }
            out << "identity " << name << " pass=" << pass << " fail=" << fail << "\n";
        }
        for (const IdentityCheck& check : identities->checks) {
            if (check.ok) continue;
            out << "mismatch identity " << check.identity << " n=" << check.n
                << " expected=" << format_rational(check.expected)
                << " got=" << format_rational(check.got) << "\n";
        }
    }
    out << (ok ? "RESULT PASS\n" : "RESULT FAIL\n");
}

void verify_csv(const std::vector<VerificationReport>& reports,
                const std::optional<IdentityReport>& identities,
                const GlobalOptions& global, std::ostream& out) {
    out << (global.stable ? "kind,sequence,n,method,status\n"
                          : "kind,sequence,n,method,status,time_us\n");
    for (const VerificationReport& report : reports) {
        for (const MethodCheck& check : report.checks) {
            out << "method," << report.sequence << ',' << check.n << ','
                << to_string(check.method) << ',' << to_string(check.status);
            if (!global.stable) out << ',' << check.elapsed.count();
            out << "\n";
        }
    }
    if (identities) {
        for (const IdentityCheck& check : identities->checks) {
            out << "identity,," << check.n << ',' << check.identity << ','
                << (check.ok ? "pass" : "fail");
            if (!global.stable) out << ',';
            out << "\n";
        }
    }
}

void verify_json(const std::vector<VerificationReport>& reports,
                 const std::optional<IdentityReport>& identities, bool ok, int max_n,
                 const GlobalOptions& global, std::ostream& out) {
    ordered_json doc;
    doc["command"] = "verify";
    doc["n_max"] = max_n;
    doc["composition_cap"] = global.composition_cap;
    doc["sequences"] = ordered_json::array();
    for (const VerificationReport& report : reports) {
        ordered_json entry;
        entry["sequence"] = report.sequence;
        entry["checks"] = ordered_json::array();
        for (const MethodCheck& check : report.checks) {
            ordered_json item;
            item["n"] = check.n;
            item["method"] = std::string(to_string(check.method));
            item["status"] = std::string(to_string(check.status));
            if (!global.stable && check.status != CheckStatus::skipped) {
                item["time_us"] = check.elapsed.count();
            }
            if (check.status == CheckStatus::fail) {
                item["expected"] = format_rational(check.expected);
                item["got"] = format_rational(check.got);
            }
            if (!check.note.empty()) item["note"] = check.note;
            entry["checks"].push_back(std::move(item));
        }
        doc["sequences"].push_back(std::move(entry));
    }
    doc["identities"] = ordered_json::array();
    if (identities) {
        for (const IdentityCheck& check : identities->checks) {
            ordered_json item;
            item["identity"] = check.identity;
            item["n"] = check.n;
            item["ok"] = check.ok;
            if (!check.ok) {
                item["expected"] = format_rational(check.expected);
                item["got"] = format_rational(check.got);
            }
            doc["identities"].push_back(std::move(item));
        }
    }
    doc["result"] = ok ? "pass" : "fail";
    out << doc.dump() << "\n";
}

int cmd_verify(const VerifyArgs& args, const GlobalOptions& global, std::ostream& out) {
    OutputFormat format = parse_format(args.format);
    if (args.max_n < 1) {
        throw DomainError("--max-n must be >= 1, got " + std::to_string(args.max_n));
    }
    std::vector<VerificationReport> reports;
    bool with_identities = false;
    if (args.seq == "all") {
        for (const CatalogEntry& entry : catalog()) {
            reports.push_back(verify_all_methods(make_sequence(entry), args.max_n,
                                                 global.composition_cap));
        }
        with_identities = true;
    } else if (!args.seq.empty() && args.seq.front() == '@') {
        reports.push_back(verify_all_methods(load_coefficient_sequence(args.seq.substr(1)),
                                             args.max_n, global.composition_cap));
    } else {
        reports.push_back(verify_all_methods(make_sequence(entry(args.seq)), args.max_n,
                                             global.composition_cap));
        with_identities = true;
    }
    std::optional<IdentityReport> identities;
    if (with_identities) identities = identity_suite(args.max_n);

    bool ok = !identities || identities->all_ok();
    for (const VerificationReport& report : reports) {
        ok = ok && report.all_ok();
    }

    switch (format) {
        case OutputFormat::plain: verify_plain(reports, identities, ok, global, out); break;
        case OutputFormat::csv: verify_csv(reports, identities, global, out); break;
        case OutputFormat::json: verify_json(reports, identities, ok, args.max_n, global, out); break;
    }
    return ok ? 0 : 1;
}

// ------------------------------------------------------------------- enum

struct EnumArgs {
    int n = 0;
    std::string kind;
    std::string format = "plain";
};

int cmd_enum(const EnumArgs& args, const GlobalOptions& global, std::ostream& out) {
    OutputFormat format = parse_format(args.format);
    if (args.kind != "partitions" && args.kind != "compositions" &&
        args.kind != "diophantine") {
        throw DomainError("unknown kind \"" + args.kind +
                          "\"; expected partitions, compositions, or diophantine");
    }

    // The three streams are consumed through one emission loop so every
    // kind shares the exact same output shape.
    std::optional<PartitionStream> partitions;
    std::optional<CompositionStream> compositions;
    std::optional<DiophantineStream> diophantine;
    if (args.kind == "partitions") {
        partitions.emplace(args.n);
    } else if (args.kind == "compositions") {
        compositions.emplace(args.n, global.composition_cap);
    } else {
        diophantine.emplace(args.n);
    }
    bool track_mu = partitions.has_value();
    BigInt sum_mu(0);
    auto next_item = [&]() -> std::optional<std::vector<int>> {
        if (partitions) {
            if (auto item = partitions->next()) {
                sum_mu += multiplicity(*item);
                return item->parts();
            }
            return std::nullopt;
        }
        if (compositions) {
            if (auto item = compositions->next()) return item->parts();
            return std::nullopt;
        }
        if (auto item = diophantine->next()) return item->counts();
        return std::nullopt;
    };

    // Items are streamed straight to `out` (a composition run within the
    // cap can still mean tens of millions of lines).
    std::uint64_t count = 0;
    switch (format) {
        case OutputFormat::plain:
            while (auto item = next_item()) {
                out << bracket_form(*item) << "\n";
                ++count;
            }
            out << "count " << count;
            if (track_mu) out << " sum_mu " << sum_mu.get_str();
            out << "\n";
            break;
        case OutputFormat::csv:
            out << "item\n";
            while (auto item = next_item()) {
                out << csv_quote(bracket_form(*item)) << "\n";
                ++count;
            }
            break;
        case OutputFormat::json:
            // Emitted by hand so the item list need not be materialized;
            // bracket_form already is a JSON array of integers.
            out << "{\"command\":\"enum\",\"kind\":\"" << args.kind << "\",\"n\":" << args.n
                << ",\"items\":[";
            while (auto item = next_item()) {
                if (count > 0) out << ',';
                out << bracket_form(*item);
                ++count;
            }
            out << "],\"count\":" << count;
            if (track_mu) out << ",\"sum_mu\":\"" << sum_mu.get_str() << "\"";
            out << "}\n";
            break;
    }
    return 0;
}

// ------------------------------------------------------------------ bench

struct BenchArgs {
    std::string seq;
    int n = 0;
    std::string methods = "recursion,composition,partition,diophantine,determinant,series_reciprocal";
    int repeats = 1;
    std::string format = "plain";
};

int cmd_bench(const BenchArgs& args, const GlobalOptions& global, std::ostream& out) {
    OutputFormat format = parse_format(args.format);
    if (args.n < 1) {
        throw DomainError("--n must be >= 1, got " + std::to_string(args.n));
    }
    if (args.repeats < 1) {
        throw DomainError("--repeats must be >= 1, got " + std::to_string(args.repeats));
    }
    std::vector<MethodId> methods = parse_method_list(args.methods);
    const CatalogEntry* entry = nullptr;
    std::string sequence_name = resolve_sequence(args.seq, &entry).name();

    struct BenchRow {
        MethodId method = MethodId::recursion;
        bool skipped = false;
        std::optional<std::uint64_t> terms;
        long long best_time_us = 0;
    };
    std::vector<BenchRow> rows;
    for (MethodId method : methods) {
        BenchRow row;
        row.method = method;
        if (method == MethodId::composition &&
            (args.n > global.composition_cap || args.n > kCompositionMaskLimit)) {
            row.skipped = true;
            if (args.n <= kCompositionMaskLimit) {
                row.terms = std::uint64_t{1} << (args.n - 1);
            }
            rows.push_back(row);
            continue;
        }
        long long best = -1;
        EvalStats stats;
        for (int repeat = 0; repeat < args.repeats; ++repeat) {
            // Fresh instance per repeat so memoization cannot flatter the
            // later rounds.
            CoefficientSequence sequence = resolve_sequence(args.seq, nullptr);
            auto begin = std::chrono::steady_clock::now();
            reciprocal_term(sequence, args.n, method, {global.composition_cap, &stats});
            auto end = std::chrono::steady_clock::now();
            long long us =
                std::chrono::duration_cast<std::chrono::microseconds>(end - begin).count();
            if (best < 0 || us < best) best = us;
        }
        row.terms = stats.terms;
        row.best_time_us = best;
        rows.push_back(row);
    }

    switch (format) {
        case OutputFormat::plain:
            for (const BenchRow& row : rows) {
                out << "bench " << to_string(row.method);
                if (row.skipped) out << " skipped";
                if (row.terms) out << " terms=" << *row.terms;
                if (!row.skipped && !global.stable) out << " time_us=" << row.best_time_us;
                out << "\n";
            }
            break;
        case OutputFormat::csv:
            out << (global.stable ? "method,terms,status\n" : "method,terms,status,time_us\n");
            for (const BenchRow& row : rows) {
                out << to_string(row.method) << ',';
                if (row.terms) out << *row.terms;
                out << ',' << (row.skipped ? "skipped" : "ok");
                if (!global.stable) {
                    out << ',';
                    if (!row.skipped) out << row.best_time_us;
                }
                out << "\n";
            }
            break;
        case OutputFormat::json: {
            ordered_json doc;
            doc["command"] = "bench";
            doc["sequence"] = sequence_name;
            doc["n"] = args.n;
            doc["repeats"] = args.repeats;
            doc["methods"] = ordered_json::array();
            for (const BenchRow& row : rows) {
                ordered_json item;
                item["method"] = std::string(to_string(row.method));
                item["status"] = row.skipped ? "skipped" : "ok";
                if (row.terms) item["terms"] = *row.terms;
                if (!row.skipped && !global.stable) item["time_us"] = row.best_time_us;
                doc["methods"].push_back(std::move(item));
            }
            out << doc.dump() << "\n";
            break;
        }
    }
    return 0;
}

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
    try {
        return body();
    } catch (const ResourceLimitError& error) {
        err << "error: " << error.what() << "\n";
        return 3;
    } catch (const Error& error) {
        err << "error: " << error.what() << "\n";
        return 2;
    } catch (const std::exception& error) {
        err << "error: " << error.what() << "\n";
        return 2;
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact calculator for the reciprocal sequence of a power series"};
    app.name("convseq");
    app.fallthrough();
    app.footer(catalog_help());

    GlobalOptions global;
    app.add_option("--composition-cap", global.composition_cap,
                   "largest n the composition enumeration accepts (2^(n-1) items)")
        ->capture_default_str();
    app.add_flag("--stable", global.stable,
                 "omit timing fields so repeated runs are byte-identical");

    ComputeArgs compute_args;
    CLI::App* compute = app.add_subcommand(
        "compute", "compute reciprocal terms b_n (plus the named value for catalog entries)");
    compute->add_option("--seq", compute_args.seq, "catalog name or @path to a coefficient file")
        ->required();
    compute->add_option("--from", compute_args.from, "first index, >= 1")->required();
    compute->add_option("--to", compute_args.to, "last index, inclusive")->required();
    compute->add_option("--method", compute_args.method,
                        "recursion|composition|partition|diophantine|determinant|series_reciprocal")
        ->capture_default_str();
    compute->add_option("--format", compute_args.format, "plain|json|csv")->capture_default_str();

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand(
        "verify", "check every method against the recursion reference, plus the identity suite");
    verify->add_option("--seq", verify_args.seq, "catalog name, \"all\", or @path")->required();
    verify->add_option("--max-n", verify_args.max_n, "verify n = 1..max-n")->required();
    verify->add_option("--format", verify_args.format, "plain|json|csv")->capture_default_str();

    EnumArgs enum_args;
    CLI::App* enumerate = app.add_subcommand(
        "enum", "list partitions, compositions, or diophantine solutions of n");
    enumerate->add_option("--n", enum_args.n, "the integer to decompose")->required();
    enumerate->add_option("--kind", enum_args.kind, "partitions|compositions|diophantine")
        ->required();
    enumerate->add_option("--format", enum_args.format, "plain|json|csv")->capture_default_str();

    BenchArgs bench_args;
    CLI::App* bench = app.add_subcommand(
        "bench", "time the methods at a single index and report their term counts");
    bench->add_option("--seq", bench_args.seq, "catalog name or @path")->required();
    bench->add_option("--n", bench_args.n, "index to benchmark")->required();
    bench->add_option("--methods", bench_args.methods, "comma-separated method ids")
        ->capture_default_str();
    bench->add_option("--repeats", bench_args.repeats, "best-of-k timing, k >= 1")
        ->capture_default_str();
    bench->add_option("--format", bench_args.format, "plain|json|csv")->capture_default_str();

    app.require_subcommand(1);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("convseq");
    for (const std::string& arg : args) argv.push_back(arg.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& error) {
        int code = app.exit(error, out, err);
        return code == 0 ? 0 : 2;
    }

    return guarded(err, [&]() -> int {
        if (compute->parsed()) return cmd_compute(compute_args, global, out);
        if (verify->parsed()) return cmd_verify(verify_args, global, out);
        if (enumerate->parsed()) return cmd_enum(enum_args, global, out);
        if (bench->parsed()) return cmd_bench(bench_args, global, out);
        err << "error: no subcommand selected\n";
        return 2;
    });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

} // namespace convseq::cli
