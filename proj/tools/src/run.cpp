#include "knotcab_cli/run.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

#include "knotcab/bracket.hpp"
#include "knotcab/cache.hpp"
#include "knotcab/errors.hpp"
#include "knotcab/laurent.hpp"
#include "knotcab/pd.hpp"
#include "knotcab/stability.hpp"
#include "knotcab/stategraph.hpp"

namespace knotcab::cli {
namespace {

using ojson = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

struct Config {
    std::vector<std::string> files;
    std::string engine = "auto";
    unsigned n = 2;
    unsigned n_max = 0;
    std::string var = "A";
    bool normalized = false;
    bool as_json = false;
    std::string cache_dir;
    std::string census_file;
    std::size_t naive_cap = 16;
    std::size_t frontier_cap = 1'000'000;
};

Engine engine_from(const std::string& s) {
    if (s == "naive") return Engine::Naive;
    if (s == "frontier") return Engine::Frontier;
    return Engine::Auto;
}

EngineOptions engine_options(const Config& cfg) {
    EngineOptions o;
    o.naive_cap = cfg.naive_cap;
    o.frontier_cap = cfg.frontier_cap;
    return o;
}

// Engine errors carry a hint about which knob would let the run through,
// unless the message already names one.
std::string engine_hint(const Error& e) {
    if (std::string_view(e.what()).find("raise") != std::string_view::npos)
        return {};
    if (dynamic_cast<const FrontierTooWide*>(&e))
        return " (raise --frontier-cap)";
    if (dynamic_cast<const TooLarge*>(&e))
        return " (raise --naive-cap or use --engine frontier)";
    return {};
}

std::optional<std::string> slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// One knot line of an input file, before parsing.
struct InputLine {
    std::string file;
    std::size_t line = 0;
    std::string text;
};

// Reads all knot lines ('#' comments and blank lines skipped) from every
// file, in order.  Unreadable files are reported and flip *code to input
// error.
std::vector<InputLine> read_lines(const std::vector<std::string>& files,
                                  std::ostream& err, int* code) {
    std::vector<InputLine> out;
    for (const auto& f : files) {
        auto text = slurp(f);
        if (!text) {
            err << "error: cannot read '" << f << "'\n";
            *code = kInputError;
            continue;
        }
        std::istringstream is(*text);
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(is, line)) {
            ++lineno;
            if (auto hash = line.find('#'); hash != std::string::npos)
                line = line.substr(0, hash);
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                                     line.back() == '\t'))
                line.pop_back();
            if (line.find_first_not_of(" \t") == std::string::npos) continue;
            out.push_back({f, lineno, line});
        }
    }
    return out;
}

// Parses every line, keeping per-line file origins; bad lines are reported
// and *code becomes kInputError (callers that treat bad lines as findings,
// i.e. `parse`, do their own loop instead).
std::vector<PDCode> parse_lines(const std::vector<InputLine>& lines,
                                std::ostream& err, int* code) {
    std::vector<PDCode> knots;
    for (const auto& l : lines) {
        try {
            PDCode d = parse_pd(l.text);
            if (d.name().empty())
                d.set_name("line" + std::to_string(l.line));
            knots.push_back(std::move(d));
        } catch (const Error& e) {
            err << l.file << ":" << l.line << ": error: " << e.what() << "\n";
            *code = kInputError;
        }
    }
    return knots;
}

// Runs `work(knot, out_text)` for every knot on a small thread pool and
// returns the collected outputs in input order plus the max result code.
template <typename Work>
int fan_out(const std::vector<PDCode>& knots, std::vector<std::string>* outs,
            Work work) {
    outs->assign(knots.size(), {});
    std::vector<int> codes(knots.size(), kOk);
    std::atomic<std::size_t> next{0};
    auto body = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < knots.size();)
            codes[i] = work(knots[i], &(*outs)[i]);
    };
    const std::size_t workers =
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()),
                              knots.size());
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(body);
    if (workers > 0) body();
    for (auto& th : pool) th.join();
    int code = kOk;
    for (int c : codes) code = std::max(code, c);
    return code;
}

// Polynomial rendering in the requested variable.  q-form values with a
// nonzero lattice offset print the offset explicitly so the text stays an
// exact identity.
struct PolyOut {
    std::string text;
    ojson j;
};

PolyOut render_poly(const LaurentPoly& p, const std::string& var) {
    PolyOut r;
    if (var == "A") {
        r.text = p.to_text("A");
        r.j = ojson{{"var", "A"},
                    {"poly", nlohmann::json::parse(p.to_json())}};
        return r;
    }
    QForm qf = to_q(p); // NotOnLattice propagates to the caller
    r.text = qf.poly_q.to_text("q");
    if (qf.offset != 0)
        r.text = "A^" + std::to_string(qf.offset) + " * (" + r.text + ")";
    r.j = ojson{{"var", "q"},
                {"q_offset", qf.offset},
                {"poly", nlohmann::json::parse(qf.poly_q.to_json())}};
    return r;
}

ojson side_json(const GraphStats& s) {
    return ojson{{"polarity", s.polarity == Splice::A ? "A" : "B"},
                 {"v", s.vertices},
                 {"e", s.edges},
                 {"beta1", s.beta1},
                 {"mu", s.mu},
                 {"tau", s.tau},
                 {"theta", s.theta},
                 {"adequate", s.adequate},
                 {"multiplicities", s.multiplicities}};
}

std::string side_text(const GraphStats& s) {
    std::ostringstream os;
    os << (s.polarity == Splice::A ? "A" : "B") << ": v=" << s.vertices
       << " e=" << s.edges << " beta1=" << s.beta1 << " mu=" << s.mu
       << " tau=" << s.tau << " theta=" << s.theta
       << " adequate=" << (s.adequate ? "yes" : "no") << " mult=[";
    for (std::size_t i = 0; i < s.multiplicities.size(); ++i)
        os << (i ? "," : "") << s.multiplicities[i];
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------- parse --

int cmd_parse(const Config& cfg, std::ostream& out, std::ostream& err) {
    int io_code = kOk;
    auto lines = read_lines(cfg.files, err, &io_code);
    std::size_t ok = 0, bad = 0;
    for (const auto& l : lines) {
        try {
            PDCode d = parse_pd(l.text);
            if (d.name().empty())
                d.set_name("line" + std::to_string(l.line));
            if (cfg.as_json) {
                out << ojson{{"file", l.file},
                             {"line", l.line},
                             {"ok", true},
                             {"name", d.name()},
                             {"crossings", d.crossing_count()},
                             {"writhe", d.writhe()}}
                           .dump()
                    << "\n";
            } else {
                out << l.file << ":" << l.line << ": OK " << d.name() << " ("
                    << d.crossing_count() << " crossings, writhe "
                    << d.writhe() << ")\n";
            }
            ++ok;
        } catch (const Error& e) {
            if (cfg.as_json) {
                out << ojson{{"file", l.file},
                             {"line", l.line},
                             {"ok", false},
                             {"error", e.what()}}
                           .dump()
                    << "\n";
            } else {
                out << l.file << ":" << l.line << ": error: " << e.what()
                    << "\n";
            }
            ++bad;
        }
    }
    if (!cfg.as_json)
        out << ok << " ok, " << bad << " error" << (bad == 1 ? "" : "s")
            << "\n";
    if (lines.empty() && io_code == kOk)
        err << "warning: no knots found\n";
    if (io_code != kOk) return io_code;
    return bad ? kCheckFailed : kOk;
}

// --------------------------------------------------------------- bracket --

int cmd_bracket(const Config& cfg, std::ostream& out, std::ostream& err) {
    int code = kOk;
    auto lines = read_lines(cfg.files, err, &code);
    auto knots = parse_lines(lines, err, &code);
    if (knots.empty() && code == kOk) err << "warning: no knots found\n";
    const Engine eng = engine_from(cfg.engine);
    const EngineOptions opts = engine_options(cfg);
    std::vector<std::string> outs;
    int work_code = fan_out(knots, &outs, [&](const PDCode& d, std::string* s) {
        std::ostringstream os;
        try {
            LaurentPoly red = bracket_reduced(d, eng, opts);
            PolyOut po = render_poly(red, cfg.var);
            if (cfg.as_json) {
                ojson j{{"name", d.name()},
                        {"crossings", d.crossing_count()},
                        {"writhe", d.writhe()},
                        {"engine", cfg.engine}};
                j.update(po.j);
                os << j.dump() << "\n";
            } else {
                os << d.name() << ": " << po.text << "\n";
            }
            *s = os.str();
            return kOk;
        } catch (const Error& e) {
            os << d.name() << ": error: " << e.what() << engine_hint(e)
               << "\n";
            *s = os.str();
            return kCheckFailed;
        }
    });
    for (const auto& s : outs) out << s;
    return std::max(code, work_code);
}

// ----------------------------------------------------------------- jones --

int cmd_jones(const Config& cfg, std::ostream& out, std::ostream& err) {
    int code = kOk;
    auto lines = read_lines(cfg.files, err, &code);
    auto knots = parse_lines(lines, err, &code);
    if (knots.empty() && code == kOk) err << "warning: no knots found\n";
    const Engine eng = engine_from(cfg.engine);
    const EngineOptions opts = engine_options(cfg);
    std::optional<PolyCache> cache;
    if (!cfg.cache_dir.empty()) cache.emplace(cfg.cache_dir);
    const unsigned n_hi = std::max(cfg.n, cfg.n_max);
    std::vector<std::string> outs;
    int work_code = fan_out(knots, &outs, [&](const PDCode& d, std::string* s) {
        std::ostringstream os;
        int rc = kOk;
        CableBracketMemo memo;
        for (unsigned k = cfg.n; k <= n_hi; ++k) {
            try {
                ColoredJones j = colored_jones(d, k, eng, opts, &memo,
                                               cache ? &*cache : nullptr);
                const LaurentPoly& p =
                    cfg.normalized ? j.normalized : j.unnormalized;
                PolyOut po = render_poly(p, cfg.var);
                if (cfg.as_json) {
                    ojson obj{{"name", d.name()},
                              {"n", k},
                              {"writhe", j.writhe},
                              {"normalized", cfg.normalized}};
                    obj.update(po.j);
                    os << obj.dump() << "\n";
                } else {
                    os << d.name() << ": " << (cfg.normalized ? "J'(" : "J(")
                       << k << ") = " << po.text << "\n";
                }
            } catch (const Error& e) {
                os << d.name() << ": n=" << k << ": error: " << e.what()
                   << engine_hint(e) << "\n";
                rc = kCheckFailed;
            }
        }
        *s = os.str();
        return rc;
    });
    for (const auto& s : outs) out << s;
    return std::max(code, work_code);
}

// ---------------------------------------------------------------- graphs --

int cmd_graphs(const Config& cfg, std::ostream& out, std::ostream& err) {
    int code = kOk;
    auto lines = read_lines(cfg.files, err, &code);
    auto knots = parse_lines(lines, err, &code);
    if (knots.empty() && code == kOk) err << "warning: no knots found\n";
    std::vector<std::string> outs;
    int work_code = fan_out(knots, &outs, [&](const PDCode& d, std::string* s) {
        std::ostringstream os;
        try {
            GraphStats a = stats(d, Splice::A);
            GraphStats b = stats(d, Splice::B);
            if (cfg.as_json) {
                os << ojson{{"name", d.name()},
                            {"crossings", d.crossing_count()},
                            {"writhe", d.writhe()},
                            {"alternating", is_alternating(d)},
                            {"a", side_json(a)},
                            {"b", side_json(b)}}
                          .dump()
                   << "\n";
            } else {
                os << d.name() << ": " << side_text(a) << "\n"
                   << std::string(d.name().size() + 2, ' ') << side_text(b)
                   << "\n";
            }
            *s = os.str();
            return kOk;
        } catch (const Error& e) {
            os << d.name() << ": error: " << e.what() << "\n";
            *s = os.str();
            return kCheckFailed;
        }
    });
    for (const auto& s : outs) out << s;
    return std::max(code, work_code);
}

// ---------------------------------------------------------------- census --

std::optional<std::vector<CensusEntry>> read_census(const Config& cfg,
                                                    std::ostream& err) {
    auto text = slurp(cfg.census_file);
    if (!text) {
        err << "error: cannot read census '" << cfg.census_file << "'\n";
        return std::nullopt;
    }
    try {
        return load_census(*text);
    } catch (const Error& e) {
        err << "error: census '" << cfg.census_file << "': " << e.what()
            << "\n";
        return std::nullopt;
    }
}

// ---------------------------------------------------------------- verify --

const char* status_letter(CheckResult::Status s) { return to_string(s); }

int cmd_verify(const Config& cfg, std::ostream& out, std::ostream& err) {
    int code = kOk;
    auto lines = read_lines(cfg.files, err, &code);
    auto knots = parse_lines(lines, err, &code);
    if (knots.empty() && code == kOk) err << "warning: no knots found\n";
    std::vector<CensusEntry> census;
    bool have_census = false;
    if (!cfg.census_file.empty()) {
        auto c = read_census(cfg, err);
        if (!c) return kInputError;
        census = std::move(*c);
        have_census = true;
    }
    std::optional<PolyCache> cache;
    if (!cfg.cache_dir.empty()) cache.emplace(cfg.cache_dir);

    VerifyOptions base;
    base.n_max = cfg.n_max ? cfg.n_max : 3;
    base.engine = engine_from(cfg.engine);
    base.engine_opts = engine_options(cfg);
    base.cache = cache ? &*cache : nullptr;

    std::vector<std::string> outs;
    int work_code = fan_out(knots, &outs, [&](const PDCode& d, std::string* s) {
        std::ostringstream os;
        try {
            VerifyOptions vo = base;
            if (have_census) vo.census = find_census(census, d.name());
            VerificationReport r = verify_stabilization(d, vo);
            if (have_census && !vo.census)
                r.checks.push_back({"volume-bounds",
                                    CheckResult::Status::Skipped, "", "",
                                    "no census entry for '" + d.name() + "'"});
            std::size_t pass = 0, fail = 0, skip = 0, inap = 0;
            for (const auto& c : r.checks) {
                switch (c.status) {
                case CheckResult::Status::Pass: ++pass; break;
                case CheckResult::Status::Fail: ++fail; break;
                case CheckResult::Status::Skipped: ++skip; break;
                case CheckResult::Status::Inapplicable: ++inap; break;
                }
            }
            if (cfg.as_json) {
                ojson checks = ojson::array();
                for (const auto& c : r.checks)
                    checks.push_back(ojson{{"id", c.id},
                                           {"status", status_letter(c.status)},
                                           {"expected", c.expected},
                                           {"got", c.got},
                                           {"note", c.note}});
                os << ojson{{"name", r.name},
                            {"crossings", r.crossings},
                            {"alternating", r.alternating},
                            {"reduced_alternating", r.reduced_alternating},
                            {"n_max", r.n_max},
                            {"a", side_json(r.stats_a)},
                            {"b", side_json(r.stats_b)},
                            {"checks", checks},
                            {"all_passed", r.all_passed()}}
                          .dump()
                   << "\n";
            } else {
                os << r.name << ": " << r.checks.size() << " checks: " << pass
                   << " pass, " << fail << " fail, " << skip << " skipped, "
                   << inap << " inapplicable — "
                   << (r.all_passed() ? "OK" : "FAIL") << "\n";
                for (const auto& c : r.checks) {
                    if (c.status == CheckResult::Status::Pass) continue;
                    os << "  " << status_letter(c.status) << " " << c.id;
                    if (!c.expected.empty() || !c.got.empty())
                        os << ": expected=" << c.expected << " got=" << c.got;
                    if (!c.note.empty()) os << " (" << c.note << ")";
                    os << "\n";
                }
            }
            *s = os.str();
            return r.all_passed() ? kOk : kCheckFailed;
        } catch (const Error& e) {
            os << d.name() << ": error: " << e.what() << engine_hint(e)
               << "\n";
            *s = os.str();
            return kCheckFailed;
        }
    });
    for (const auto& s : outs) out << s;
    return std::max(code, work_code);
}

// --------------------------------------------------------- volume-bounds --

int cmd_volume_bounds(const Config& cfg, std::ostream& out,
                      std::ostream& err) {
    int code = kOk;
    auto lines = read_lines(cfg.files, err, &code);
    auto knots = parse_lines(lines, err, &code);
    if (knots.empty() && code == kOk) err << "warning: no knots found\n";
    auto census = read_census(cfg, err);
    if (!census) return kInputError;
    std::vector<std::string> outs;
    int work_code = fan_out(knots, &outs, [&](const PDCode& d, std::string* s) {
        std::ostringstream os;
        const std::size_t b = stats(d, Splice::A).beta1;
        const std::size_t beta = stats(d, Splice::B).beta1;
        std::string status, note;
        VolumeBounds vb;
        bool have_vb = false;
        const CensusEntry* entry = find_census(*census, d.name());
        if (!entry) {
            status = "SKIPPED";
            note = "no census entry";
        } else {
            try {
                vb = volume_bounds(b, beta, *entry);
                have_vb = true;
                status = vb.pass ? "PASS" : "FAIL";
            } catch (const Inapplicable& e) {
                status = "INAPPLICABLE";
                note = e.what();
            } catch (const MissingVolume& e) {
                status = "SKIPPED";
                note = e.what();
            }
        }
        if (cfg.as_json) {
            ojson j{{"name", d.name()},
                    {"b", b},
                    {"beta", beta},
                    {"status", status}};
            if (have_vb) {
                j["lower"] = vb.lower;
                j["volume"] = vb.volume;
                j["upper"] = vb.upper;
            }
            if (!note.empty()) j["note"] = note;
            os << j.dump() << "\n";
        } else {
            os << d.name() << ": ";
            if (have_vb)
                os << vb.lower << " <= " << vb.volume << " <= " << vb.upper
                   << " " << status;
            else
                os << status << (note.empty() ? "" : " (" + note + ")");
            os << "\n";
        }
        *s = os.str();
        return status == "FAIL" ? kCheckFailed : kOk;
    });
    for (const auto& s : outs) out << s;
    return std::max(code, work_code);
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Kauffman brackets, colored Jones polynomials, state "
                 "graphs, and stabilization checks for knot diagrams"};
    app.require_subcommand(1);
    Config cfg;

    auto add_files = [&](CLI::App* s) {
        s->add_option("files", cfg.files,
                      "input files, one knot per line: [name :] X[a,b,c,d] "
                      "... ('#' comments)")
            ->required()
            ->expected(-1);
    };
    auto add_engine = [&](CLI::App* s) {
        s->add_option("--engine", cfg.engine, "naive | frontier | auto")
            ->check(CLI::IsMember({"naive", "frontier", "auto"}))
            ->capture_default_str();
        s->add_option("--naive-cap", cfg.naive_cap,
                      "max crossings for the naive engine")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        s->add_option("--frontier-cap", cfg.frontier_cap,
                      "max live pairings for the frontier engine")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    };
    auto add_var = [&](CLI::App* s) {
        s->add_option("--var", cfg.var, "output variable: A | q")
            ->check(CLI::IsMember({"A", "q"}))
            ->capture_default_str();
    };
    auto add_json = [&](CLI::App* s) {
        s->add_flag("--json", cfg.as_json, "machine output, one JSON object "
                                           "per line");
    };
    auto add_cache = [&](CLI::App* s) {
        s->add_option("--cache", cfg.cache_dir,
                      "directory for the content-addressed polynomial cache")
            ->option_text("DIR");
    };

    CLI::App* p = app.add_subcommand("parse", "validate knot lines");
    add_files(p);
    add_json(p);

    CLI::App* b = app.add_subcommand(
        "bracket", "reduced Kauffman bracket (unknot evaluates to 1)");
    add_files(b);
    add_engine(b);
    add_var(b);
    add_json(b);

    CLI::App* j = app.add_subcommand("jones", "colored Jones polynomial");
    add_files(j);
    add_engine(j);
    add_var(j);
    add_json(j);
    add_cache(j);
    j->add_option("--n", cfg.n, "color (2 = classical Jones polynomial)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    j->add_option("--n-max", cfg.n_max,
                  "when larger than --n, print every color n..n-max");
    j->add_flag("--normalized", cfg.normalized,
                "print J'(n) (value 1 on the unknot) instead of J(n)");

    CLI::App* g = app.add_subcommand(
        "graphs", "statistics of the all-A and all-B state graphs");
    add_files(g);
    add_json(g);

    CLI::App* v = app.add_subcommand(
        "verify", "span, extreme-coefficient, stabilization, and volume "
                  "checks per knot");
    add_files(v);
    add_engine(v);
    add_json(v);
    add_cache(v);
    v->add_option("--n-max", cfg.n_max, "largest color to verify (default 3)")
        ->check(CLI::PositiveNumber);
    v->add_option("--census", cfg.census_file,
                  "CSV name,volume,alternating,prime,torus enabling volume "
                  "checks")
        ->option_text("FILE");

    CLI::App* vb = app.add_subcommand(
        "volume-bounds", "two-sided hyperbolic volume bounds from state-graph "
                         "cycle ranks");
    add_files(vb);
    add_json(vb);
    vb->add_option("--census", cfg.census_file, "census CSV (required)")
        ->option_text("FILE")
        ->required();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        std::ostringstream dummy;
        int rc = app.exit(e, out, err);
        return rc == 0 ? kOk : kInputError;
    }

    if (*p) return cmd_parse(cfg, out, err);
    if (*b) return cmd_bracket(cfg, out, err);
    if (*j) return cmd_jones(cfg, out, err);
    if (*g) return cmd_graphs(cfg, out, err);
    if (*v) return cmd_verify(cfg, out, err);
    if (*vb) return cmd_volume_bounds(cfg, out, err);
    err << "error: no command\n";
    return kInputError;
}

} // namespace knotcab::cli
