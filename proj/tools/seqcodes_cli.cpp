#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "seqcodes/claims.hpp"
#include "seqcodes/codes.hpp"
#include "seqcodes/combinatorics.hpp"
#include "seqcodes/cyclotomic.hpp"
#include "seqcodes/minpoly.hpp"
#include "seqcodes/sequences.hpp"

using namespace seqcodes;
using json = nlohmann::ordered_json;

namespace {

constexpr int kUsage = 1;
constexpr int kMismatch = 2;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Common {
    std::uint64_t p = 2;
    unsigned s = 1;
    unsigned m = 0;
    std::string format = "text";
    std::string output;
    std::uint64_t budget = kDefaultBudget;
    unsigned threads = 1;
};

void add_field_flags(CLI::App* cmd, Common& c, bool need_m) {
    cmd->add_option("-p", c.p, "characteristic")->capture_default_str();
    cmd->add_option("-s", c.s, "base field degree, q = p^s")->capture_default_str();
    auto* m = cmd->add_option("-m", c.m, "extension degree over GF(q)");
    if (need_m) m->required();
}

void add_format(CLI::App* cmd, Common& c) {
    cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}))->capture_default_str();
    cmd->add_option("-o,--output", c.output, "write to a file instead of standard output");
}

void add_budget(CLI::App* cmd, Common& c) {
    cmd->add_option("--budget", c.budget, "codeword enumeration budget")->check(CLI::Range(std::uint64_t{1}, ~std::uint64_t{0}))->capture_default_str();
    cmd->add_option("--threads", c.threads, "worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();
}

std::vector<std::uint64_t> parse_list(const std::string& text, const std::string& what) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t pos = 0;
            const auto dots = tok.find("..");
            if (dots != std::string::npos) {
                const auto lo = std::stoull(tok.substr(0, dots), &pos);
                if (pos != dots) throw std::invalid_argument(tok);
                const auto tail = tok.substr(dots + 2);
                const auto hi = std::stoull(tail, &pos);
                if (pos != tail.size() || hi < lo) throw std::invalid_argument(tok);
                for (auto v = lo; v <= hi; ++v) out.push_back(v);
                continue;
            }
            const auto v = std::stoull(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("malformed " + what + " list entry '" + tok + "'");
        }
    }
    if (out.empty()) throw UsageError("empty " + what + " list");
    return out;
}

std::string csv_escape(const std::string& v) {
    if (v.find_first_of(",\"\n") == std::string::npos) return v;
    std::string out = "\"";
    for (char ch : v) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return out + "\"";
}

std::string join(const std::vector<std::uint64_t>& v, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
    return out;
}

class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw UsageError("cannot open output file " + path);
        }
    }
    std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

// ---- field ----

int cmd_field(const Common& c) {
    const auto ctx = build_field(c.p, c.s, c.m);
    Sink sink(c.output);
    auto& os = sink.out();
    json j;
    j["p"] = ctx->p();
    j["s"] = ctx->s();
    j["m"] = ctx->m();
    j["q"] = ctx->q();
    j["order"] = ctx->order();
    j["n"] = ctx->n();
    j["base_modulus"] = ctx->base_modulus().to_text();
    j["modulus"] = ctx->ext_modulus().to_text();
    j["alpha"] = ctx->encode(ctx->alpha());
    if (c.format == "json") {
        os << j.dump() << "\n";
    } else if (c.format == "csv") {
        os << "p,s,m,q,order,n,base_modulus,modulus,alpha\n";
        os << ctx->p() << "," << ctx->s() << "," << ctx->m() << "," << ctx->q() << "," << ctx->order() << "," << ctx->n() << ","
           << csv_escape(ctx->base_modulus().to_text()) << "," << csv_escape(ctx->ext_modulus().to_text()) << "," << ctx->encode(ctx->alpha()) << "\n";
    } else {
        os << "GF(" << ctx->q() << "^" << ctx->m() << "), p=" << ctx->p() << " s=" << ctx->s() << "\n";
        os << "base modulus: " << ctx->base_modulus().to_text() << "\n";
        os << "modulus: " << ctx->ext_modulus().to_text() << "\n";
        os << "alpha: " << ctx->encode(ctx->alpha()) << "\n";
        os << "n=" << ctx->n() << "\n";
    }
    return 0;
}

// ---- cosets ----

int cmd_cosets(const Common& c, std::uint64_t n) {
    const std::uint64_t q = checked_pow(c.p, c.s);
    if (!is_prime(c.p)) throw UsageError("p = " + std::to_string(c.p) + " is not prime");
    if (n == 0) {
        if (c.m == 0) throw UsageError("cosets needs -n or -m");
        n = checked_pow(q, c.m) - 1;
    }
    const CosetTable table(n, q);
    Sink sink(c.output);
    auto& os = sink.out();
    if (c.format == "json") {
        json j;
        j["n"] = n;
        j["q"] = q;
        json arr = json::array();
        for (auto l : table.leaders()) arr.push_back(json{{"leader", l}, {"members", table.members(l)}});
        j["cosets"] = arr;
        os << j.dump() << "\n";
    } else if (c.format == "csv") {
        os << "leader,size,members\n";
        for (auto l : table.leaders()) os << l << "," << table.size(l) << "," << join(table.members(l), " ") << "\n";
    } else {
        os << table.leaders().size() << " cosets of " << q << " mod " << n << "\n";
        for (auto l : table.leaders()) os << "C_" << l << " = {" << join(table.members(l), ", ") << "}\n";
    }
    return 0;
}

// ---- sequence sources ----

struct Source {
    std::string seq_file;
    std::string subset;
    std::uint64_t n = 0;
    std::optional<std::uint64_t> monomial;
    std::string dickson;
    std::string poly;
};

void add_source(CLI::App* cmd, Source& src) {
    cmd->add_option("--seq-file", src.seq_file, "sequence file ('p s n' then n symbols)");
    cmd->add_option("--subset", src.subset, "characteristic sequence of a subset of Z_n, e.g. 0,3,5,6");
    cmd->add_option("-n", src.n, "period for --subset");
    cmd->add_option("--monomial", src.monomial, "trace sequence of x^E");
    cmd->add_option("--dickson", src.dickson, "trace sequence of a Dickson polynomial: KIND,H,A_ENC");
    cmd->add_option("--poly", src.poly, "trace sequence of f with GF(q^m) coefficients c0,c1,...");
}

FieldCtxPtr need_ctx(const Common& c, const char* what) {
    if (c.m == 0) throw UsageError(std::string(what) + " needs -m");
    return build_field(c.p, c.s, c.m);
}

std::uint64_t checked_element(const FieldCtx& ctx, std::uint64_t v) {
    if (v >= ctx.order()) throw UsageError(std::to_string(v) + " is not an element of GF(" + std::to_string(ctx.order()) + ")");
    return v;
}

std::pair<PeriodicSequence, FieldCtxPtr> build_sequence(const Common& c, const Source& src, std::string& label) {
    const int chosen = !src.seq_file.empty() + !src.subset.empty() + src.monomial.has_value() + !src.dickson.empty() + !src.poly.empty();
    if (chosen != 1) throw UsageError("give exactly one of --seq-file, --subset, --monomial, --dickson, --poly");
    if (!src.seq_file.empty()) {
        std::ifstream in(src.seq_file);
        if (!in) throw UsageError("cannot read " + src.seq_file);
        label = "seq-file " + src.seq_file;
        return {read_sequence(in), nullptr};
    }
    if (!src.subset.empty()) {
        if (src.n == 0) throw UsageError("--subset needs -n");
        if (!is_prime(c.p)) throw UsageError("p = " + std::to_string(c.p) + " is not prime");
        label = "subset " + src.subset;
        auto field = BaseField::make(c.p, c.s);
        return {characteristic_sequence(parse_list(src.subset, "subset"), src.n, field), nullptr};
    }
    const auto ctx = need_ctx(c, "this source");
    if (src.monomial) {
        label = "monomial x^" + std::to_string(*src.monomial);
        return {trace_sequence_monomial(*ctx, *src.monomial), ctx};
    }
    if (!src.dickson.empty()) {
        const auto v = parse_list(src.dickson, "dickson");
        if (v.size() != 3) throw UsageError("--dickson expects KIND,H,A_ENC");
        if (v[0] != 1 && v[0] != 2) throw UsageError("Dickson kind must be 1 or 2");
        label = "dickson kind=" + std::to_string(v[0]) + " h=" + std::to_string(v[1]) + " a=" + std::to_string(v[2]);
        const auto a = ctx->decode(checked_element(*ctx, v[2]));
        return {trace_sequence_poly(*ctx, dickson_poly(*ctx, static_cast<int>(v[0]), static_cast<unsigned>(v[1]), a)), ctx};
    }
    const auto coeffs = parse_list(src.poly, "poly");
    ExtPoly f;
    for (auto v : coeffs) f.push_back(ctx->decode(checked_element(*ctx, v)));
    label = "poly " + src.poly;
    return {trace_sequence_poly(*ctx, f), ctx};
}

// ---- code ----

int cmd_code(const Common& c, const Source& src, bool use_complement, bool classical) {
    std::string label;
    auto [seq, ctx] = build_sequence(c, src, label);
    CyclicCode code = code_from_sequence(seq, ctx);
    if (classical) {
        if (src.subset.empty()) throw UsageError("--classical needs --subset");
        code = classical_code(parse_list(src.subset, "subset"), src.n, seq.field());
        label = "classical " + label;
    }
    if (use_complement) code = complement(code);
    std::optional<DistanceResult> d;
    std::string note;
    if (code.k() == 0) {
        note = "zero code";
    } else {
        d = min_distance(code, EnumOptions{c.budget, Strategy::automatic, c.threads});
    }
    json j = code_record(code, d);
    j["source"] = label;
    if (use_complement) j["view"] = "complement";
    if (d && d->exact) j["sphere_packing"] = to_string(sphere_packing_check(code.n(), code.k(), d->lower, code.q()));
    Sink sink(c.output);
    auto& os = sink.out();
    auto d_text = [&]() -> std::string {
        if (!d) return "-";
        if (d->exact) return std::to_string(d->lower);
        return "[" + std::to_string(d->lower) + "," + std::to_string(d->upper) + "]";
    };
    if (c.format == "json") {
        os << j.dump() << "\n";
    } else if (c.format == "csv") {
        os << "source,p,s,n,k,d,method,generator\n";
        os << csv_escape(label) << "," << code.tag().p << "," << code.tag().s << "," << code.n() << "," << code.k() << "," << d_text() << ","
           << (d ? to_string(d->method) : "") << "," << csv_escape(code.generator().to_text()) << "\n";
    } else {
        os << "[" << code.n() << "," << code.k() << "," << d_text() << "] over GF(" << code.q() << ")";
        if (d) os << " via " << to_string(d->method);
        if (!note.empty()) os << " (" << note << ")";
        os << "\n";
        os << "generator: " << code.generator().to_text() << "\n";
        if (j.contains("sphere_packing")) os << "sphere packing: " << j["sphere_packing"].get<std::string>() << "\n";
    }
    return 0;
}

// ---- seq ----

int cmd_seq(const Common& c, const Source& src, bool stats) {
    std::string label;
    auto [seq, ctx] = build_sequence(c, src, label);
    Sink sink(c.output);
    auto& os = sink.out();
    const auto bm = berlekamp_massey(seq);
    if (c.format == "json") {
        json j;
        j["source"] = label;
        j["p"] = seq.field()->p();
        j["s"] = seq.field()->s();
        j["n"] = seq.n();
        j["symbols"] = seq.symbols();
        j["linear_span"] = bm.linear_span;
        j["minimal_poly"] = bm.minimal_poly.to_text();
        os << j.dump() << "\n";
    } else if (c.format == "csv") {
        os << "source,p,s,n,linear_span,minimal_poly\n";
        os << csv_escape(label) << "," << seq.field()->p() << "," << seq.field()->s() << "," << seq.n() << "," << bm.linear_span << ","
           << csv_escape(bm.minimal_poly.to_text()) << "\n";
    } else if (stats) {
        os << "n=" << seq.n() << " span=" << bm.linear_span << "\n";
        os << "minimal polynomial: " << bm.minimal_poly.to_text() << "\n";
    } else {
        write_sequence(os, seq);
    }
    return 0;
}

// ---- designs ----

int cmd_designs(const Common& c, const std::string& subset, std::uint64_t n, const std::string& singer) {
    std::vector<std::uint64_t> D;
    std::string label;
    if (!singer.empty()) {
        if (!subset.empty()) throw UsageError("give either --subset or --singer");
        const auto ctx = need_ctx(c, "--singer");
        const auto variant = singer == "binary" ? SingerVariant::trace_one_binary : SingerVariant::trace_zero_projective;
        D = singer_difference_set(*ctx, variant);
        n = singer_length(*ctx, variant);
        label = "singer " + singer;
    } else {
        if (subset.empty() || n == 0) throw UsageError("designs needs --subset with -n, or --singer");
        D = parse_list(subset, "subset");
        label = "subset";
    }
    const auto r = classify_subset(D, n);
    Sink sink(c.output);
    auto& os = sink.out();
    auto opt = [](const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : std::string(); };
    if (c.format == "json") {
        json j;
        j["source"] = label;
        j["n"] = n;
        j["size"] = D.size();
        j["kind"] = to_string(r.kind);
        j["lambda"] = r.lambda ? json(*r.lambda) : json(nullptr);
        j["t"] = r.t ? json(*r.t) : json(nullptr);
        j["set"] = D;
        os << j.dump() << "\n";
    } else if (c.format == "csv") {
        os << "source,n,size,kind,lambda,t\n";
        os << label << "," << n << "," << D.size() << "," << to_string(r.kind) << "," << opt(r.lambda) << "," << opt(r.t) << "\n";
    } else {
        os << to_string(r.kind) << " (n=" << n << ", size=" << D.size();
        if (r.lambda) os << ", lambda=" << *r.lambda;
        if (r.t) os << ", t=" << *r.t;
        os << ")\n";
        if (!singer.empty()) os << "set: " << join(D, " ") << "\n";
    }
    return 0;
}

// ---- list-claims ----

int cmd_list(const Common& c) {
    Sink sink(c.output);
    auto& os = sink.out();
    auto needs = [](const Claim& cl) {
        std::string out;
        for (std::size_t i = 0; i < cl.needs.size(); ++i) out += (i ? " " : "") + cl.needs[i];
        return out;
    };
    if (c.format == "json") {
        json arr = json::array();
        for (const auto& cl : registry()) arr.push_back(json{{"id", cl.id}, {"title", cl.title}, {"needs", cl.needs}, {"notes", cl.notes}});
        os << arr.dump() << "\n";
    } else if (c.format == "csv") {
        os << "id,needs,title\n";
        for (const auto& cl : registry()) os << cl.id << "," << needs(cl) << "," << csv_escape(cl.title) << "\n";
    } else {
        std::size_t w = 0;
        for (const auto& cl : registry()) w = std::max(w, cl.id.size());
        for (const auto& cl : registry()) {
            os << cl.id << std::string(w + 2 - cl.id.size(), ' ') << cl.title << "  [" << needs(cl) << "]\n";
        }
        os << "umbrella ids: dickson-d3, dickson-d4, dickson-d5 (member chosen by p and s)\n";
    }
    return 0;
}

// ---- verify ----

struct VerifyArgs {
    std::string id;
    std::string p = "2", s = "1", m, h, kappa, u, a;
    bool no_hypothesis = false;
    bool timing = false;
};

std::vector<ClaimParams> expand_points(const VerifyArgs& v) {
    auto list = [](const std::string& text, const std::string& what) {
        return text.empty() ? std::vector<std::optional<std::uint64_t>>{std::nullopt} : [&] {
            std::vector<std::optional<std::uint64_t>> out;
            for (auto x : parse_list(text, what)) out.emplace_back(x);
            return out;
        }();
    };
    std::vector<ClaimParams> out;
    for (auto p : list(v.p, "p"))
        for (auto s : list(v.s, "s"))
            for (auto m : list(v.m, "m"))
                for (auto h : list(v.h, "h"))
                    for (auto k : list(v.kappa, "kappa"))
                        for (auto u : list(v.u, "u"))
                            for (auto a : list(v.a, "a")) {
                                ClaimParams P;
                                P.p = *p;
                                P.s = static_cast<unsigned>(*s);
                                P.m = m ? static_cast<unsigned>(*m) : 0;
                                if (h) P.h = static_cast<unsigned>(*h);
                                if (k) P.kappa = static_cast<unsigned>(*k);
                                if (u) P.u = static_cast<unsigned>(*u);
                                P.a = a;
                                out.push_back(P);
                            }
    return out;
}

int cmd_verify(const Common& c, const VerifyArgs& v) {
    if (!is_known_claim(v.id)) {
        std::cerr << "error: unknown claim id '" << v.id << "' (see list-claims)\n";
        return kUsage;
    }
    const auto points = expand_points(v);
    struct Job {
        const Claim* claim = nullptr;
        ClaimParams params;
        std::optional<ClaimReport> report;
        std::string error;
    };
    std::vector<Job> jobs;
    for (const auto& P : points) {
        Job job;
        job.params = P;
        try {
            job.claim = &lookup(v.id, P);
            if (!v.no_hypothesis) {
                if (auto failed = check_hypotheses(*job.claim, P)) job.error = job.claim->id + ": hypothesis fails: " + *failed;
            } else {
                require_params(*job.claim, P);
            }
        } catch (const std::exception& e) {
            job.error = e.what();
        }
        jobs.push_back(std::move(job));
    }

    const bool parallel_points = c.threads > 1 && jobs.size() > 1;
    VerifyOptions opt;
    opt.budget = c.budget;
    opt.threads = parallel_points ? 1 : c.threads;
    opt.check_hypotheses = !v.no_hypothesis;
    opt.timing = v.timing;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            auto& job = jobs[i];
            if (!job.error.empty()) continue;
            try {
                job.report = verify_claim(*job.claim, job.params, opt);
            } catch (const std::exception& e) {
                job.error = e.what();
            }
        }
    };
    if (parallel_points) {
        std::vector<std::thread> pool;
        const unsigned count = std::min<std::size_t>(c.threads, jobs.size());
        for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    } else {
        worker();
    }

    Sink sink(c.output);
    auto& os = sink.out();
    if (c.format == "csv") os << ClaimReport::csv_header() << "\n";
    bool mismatch = false;
    std::size_t ran = 0;
    for (const auto& job : jobs) {
        if (!job.report) {
            std::cerr << "skipped [" << job.params.to_text() << "]: " << job.error << "\n";
            continue;
        }
        ++ran;
        mismatch = mismatch || job.report->has_mismatch();
        if (c.format == "json") {
            os << job.report->to_json().dump() << "\n";
        } else if (c.format == "csv") {
            os << job.report->csv_row() << "\n";
        } else {
            os << job.report->to_text();
        }
    }
    if (ran == 0) {
        std::cerr << "error: no parameter point could be verified\n";
        return kUsage;
    }
    return mismatch ? kMismatch : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cyclic codes from periodic sequences over finite fields"};
    app.require_subcommand(1);
    Common common;

    auto* field = app.add_subcommand("field", "describe GF(q^m)");
    add_field_flags(field, common, true);
    add_format(field, common);

    std::uint64_t coset_n = 0;
    auto* cosets_cmd = app.add_subcommand("cosets", "q-cyclotomic cosets modulo n");
    add_field_flags(cosets_cmd, common, false);
    cosets_cmd->add_option("-n", coset_n, "modulus (default q^m - 1)");
    add_format(cosets_cmd, common);

    Source code_src;
    bool use_complement = false;
    auto* code = app.add_subcommand("code", "build the cyclic code of a sequence");
    add_field_flags(code, common, false);
    add_source(code, code_src);
    bool classical = false;
    code->add_flag("--complement", use_complement, "analyse the complement code");
    code->add_flag("--classical", classical, "classical code of the subset instead of its sequence code");
    add_budget(code, common);
    add_format(code, common);

    Source seq_src;
    bool stats = false;
    auto* seq = app.add_subcommand("seq", "generate a sequence in file format, or its linear span");
    add_field_flags(seq, common, false);
    add_source(seq, seq_src);
    seq->add_flag("--stats", stats, "print linear span and minimal polynomial instead of the symbols");
    add_format(seq, common);

    std::string design_subset, singer;
    std::uint64_t design_n = 0;
    auto* designs = app.add_subcommand("designs", "classify a subset of Z_n as a (almost) difference set");
    add_field_flags(designs, common, false);
    designs->add_option("--subset", design_subset, "subset of Z_n");
    designs->add_option("-n", design_n, "modulus");
    designs->add_option("--singer", singer, "Singer set of GF(q^m)")->check(CLI::IsMember({"binary", "projective"}));
    add_format(designs, common);

    VerifyArgs vargs;
    auto* verify = app.add_subcommand("verify", "check a claim against computation");
    verify->set_help_flag("--help", "print this help message and exit");
    verify->add_option("claim", vargs.id, "claim id")->required();
    verify->add_option("-p", vargs.p, "characteristic list")->capture_default_str();
    verify->add_option("-s", vargs.s, "base degree list")->capture_default_str();
    verify->add_option("-m", vargs.m, "extension degree list");
    verify->add_option("-h", vargs.h, "h list");
    verify->add_option("--kappa", vargs.kappa, "kappa list");
    verify->add_option("-u", vargs.u, "u list");
    verify->add_option("-a", vargs.a, "list of canonical encodings of a");
    verify->add_flag("--no-hypothesis-check", vargs.no_hypothesis, "run outside the hypotheses; verdicts become exploratory");
    verify->add_flag("--timing", vargs.timing, "record wall time per point");
    add_budget(verify, common);
    add_format(verify, common);

    auto* list = app.add_subcommand("list-claims", "list registered claims");
    add_format(list, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }

    try {
        if (*field) return cmd_field(common);
        if (*cosets_cmd) return cmd_cosets(common, coset_n);
        if (*code) return cmd_code(common, code_src, use_complement, classical);
        if (*seq) return cmd_seq(common, seq_src, stats);
        if (*designs) return cmd_designs(common, design_subset, design_n, singer);
        if (*verify) return cmd_verify(common, vargs);
        if (*list) return cmd_list(common);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
