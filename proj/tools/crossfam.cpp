#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "crossfam/constructor.hpp"
#include "crossfam/generate.hpp"
#include "crossfam/io.hpp"
#include "crossfam/order_types.hpp"
#include "crossfam/solver.hpp"

using namespace crossfam;

namespace {

enum Exit { kOk = 0, kVerify = 1, kInput = 2, kSearch = 3 };

struct PatternFlags {
    std::string name = "P3";
    std::string kind = "crossing";
    int t = 0;

    void add(CLI::App* app) {
        app->add_option("-p,--pattern", name, "K2, P3, K3, K1t, K4, Kt, P4, 2K2 or K1,<t>")->capture_default_str();
        app->add_option("-k,--kind", kind, "crossing or intersecting")->capture_default_str();
        app->add_option("-t", t, "leaf count for K1t, clique order for Kt");
    }
    Pattern pattern() const { return Pattern::parse(name, t); }
    FamilyKind family_kind() const { return parse_kind(kind); }
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

struct GenCmd {
    std::size_t n = 0;
    std::uint64_t seed = 1;
    std::string mode = "uniform";
    bool colored = false;
    std::string out = "-";

    int run() const {
        if (n < 1) throw InputError("n must be at least 1");
        write_text(out, dump(to_json(generate_points(n, seed, parse_gen_mode(mode), colored))));
        return kOk;
    }
};

struct ConstructCmd {
    std::string in = "-";
    std::string out = "-";
    PatternFlags pf;

    int run() const {
        PointSet ps = point_set_from_json(read_json(in));
        Family f = construct(ps, pf.pattern(), pf.family_kind());
        Json j = to_json(f);
        j["verification"] = verify_family(ps, f).ok ? "ok" : "failed";
        write_text(out, dump(j));
        std::cerr << f.pattern.name() << (f.pattern.t ? "(t=" + std::to_string(f.pattern.t) + ")" : "") << ' '
                  << to_string(f.kind) << ": n=" << ps.size() << " size=" << f.size()
                  << " claimed_bound=" << f.claimed_bound << " verification=ok\n";
        for (const auto& w : f.warnings) std::cerr << "warning: " << w << '\n';
        return kOk;
    }
};

struct SolveCmd {
    std::string in = "-";
    std::string out = "-";
    PatternFlags pf;
    std::optional<std::size_t> limit;
    bool unsafe = false;
    bool convex = false;

    int run() const {
        PointSet ps = point_set_from_json(read_json(in));
        if (convex) {
            auto r = max_convex_subset(ps, unsafe);
            write_text(out, dump(to_json(r)));
            std::cerr << "max convex subset: " << r.size << '\n';
            return kOk;
        }
        SolveOptions opt;
        opt.limit = limit;
        opt.unsafe_large = unsafe;
        auto r = max_family(ps, pf.pattern(), pf.family_kind(), opt);
        write_text(out, dump(to_json(r)));
        std::cerr << "max " << r.pattern.name() << ' ' << to_string(r.kind) << " family: " << r.max_size
                  << (r.limit_reached ? " (limit reached, lower bound)" : "") << '\n';
        return kOk;
    }
};

struct VerifyCmd {
    std::string points;
    std::string family = "-";

    int run() const {
        PointSet ps = point_set_from_json(read_json(points));
        Family f = family_from_json(read_json(family));
        VerifyReport rep = verify_family(ps, f);
        Json j{{"ok", rep.ok}, {"size", f.size()}, {"message", rep.message}};
        if (rep.offending) j["offending"] = {rep.offending->first, rep.offending->second};
        bool bound_ok = static_cast<std::int64_t>(f.size()) >= f.claimed_bound;
        j["meets_claimed_bound"] = bound_ok;
        std::cout << dump(j);
        return rep.ok && bound_ok ? kOk : kVerify;
    }
};

struct ScanCmd {
    std::size_t n = 9;
    std::string db;
    PatternFlags pf;
    std::size_t k = 3;
    bool convex = false;
    unsigned jobs = 1;
    std::string out = "-";
    bool quiet = false;

    int run() const {
        std::filesystem::path path;
        if (!db.empty()) path = db;
        else if (auto p = locate_db(n)) path = *p;
        else
            throw InputError("no database for n=" + std::to_string(n) + "; pass --db or set " +
                             std::string(kOrderTypeDirEnv));
        OrderTypeDb odb = open_db(path, n);
        ScanQuery q;
        q.target = convex ? ScanTarget::ConvexSubset : ScanTarget::Family;
        if (!convex) {
            q.pattern = pf.pattern();
            q.kind = pf.family_kind();
        }
        q.k = k;
        std::function<void(std::size_t, std::size_t)> progress;
        if (!quiet)
            progress = [](std::size_t done, std::size_t total) {
                std::cerr << "\rscanned " << done << " / " << total << std::flush;
            };
        ScanReport rep = scan_order_types(odb, q, jobs, progress);
        if (!quiet) std::cerr << '\n';
        write_text(out, dump(to_json(rep)));
        std::cerr << "total: " << rep.total << " violators: " << rep.violators.size() << '\n';
        return kOk;
    }
};

struct RenderCmd {
    std::string points;
    std::string family;
    std::string out = "-";
    int size = 800;
    bool no_labels = false;

    int run() const {
        PointSet ps = point_set_from_json(read_json(points));
        std::optional<Family> f;
        if (!family.empty()) f = family_from_json(read_json(family));
        SvgOptions opt;
        opt.size = size;
        opt.labels = !no_labels;
        write_text(out, render_svg(ps, f ? &*f : nullptr, opt));
        return kOk;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Crossing and intersecting families in complete geometric graphs"};
    app.require_subcommand(1);

    GenCmd gen;
    auto* g = app.add_subcommand("gen", "generate a point set in general position");
    g->add_option("-n", gen.n, "number of points")->required();
    g->add_option("-s,--seed", gen.seed)->capture_default_str();
    g->add_option("-m,--mode", gen.mode, "uniform, convex or clustered")->capture_default_str();
    g->add_flag("-c,--colored", gen.colored, "split into equal red and blue classes");
    g->add_option("-o,--out", gen.out)->capture_default_str();

    ConstructCmd con;
    auto* c = app.add_subcommand("construct", "build a verified family");
    c->add_option("-i,--in", con.in, "point set JSON")->capture_default_str();
    c->add_option("-o,--out", con.out)->capture_default_str();
    con.pf.add(c);

    SolveCmd sol;
    auto* s = app.add_subcommand("solve", "exact maximum family by exhaustive search");
    s->add_option("-i,--in", sol.in, "point set JSON")->capture_default_str();
    s->add_option("-o,--out", sol.out)->capture_default_str();
    sol.pf.add(s);
    s->add_option("--limit", sol.limit, "stop once a family of this size is found");
    s->add_flag("--unsafe-large", sol.unsafe, "search beyond the size guard");
    s->add_flag("--convex", sol.convex, "largest subset in convex position instead");

    VerifyCmd ver;
    auto* v = app.add_subcommand("verify", "check a family against a point set");
    v->add_option("--points", ver.points, "point set JSON")->required();
    v->add_option("--family", ver.family, "family JSON")->capture_default_str();

    ScanCmd sc;
    auto* scan = app.add_subcommand("scan", "scan an order-type database");
    scan->add_option("-n", sc.n, "points per record")->capture_default_str();
    scan->add_option("--db", sc.db, "database file; defaults to $ORDER_TYPE_DB_DIR/otypesNN.bXX");
    sc.pf.add(scan);
    scan->add_option("--target", sc.k, "a record violates when its maximum is below this")->capture_default_str();
    scan->add_flag("--convex", sc.convex, "scan the largest convex subset instead");
    scan->add_option("-j,--jobs", sc.jobs)->capture_default_str()->check(CLI::PositiveNumber);
    scan->add_option("-o,--out", sc.out)->capture_default_str();
    scan->add_flag("-q,--quiet", sc.quiet, "no progress output");

    RenderCmd ren;
    auto* r = app.add_subcommand("render", "draw a point set and optional family as SVG");
    r->add_option("--points", ren.points, "point set JSON")->required();
    r->add_option("--family", ren.family, "family JSON");
    r->add_option("-o,--out", ren.out)->capture_default_str();
    r->add_option("--size", ren.size, "canvas size in px")->capture_default_str()->check(CLI::PositiveNumber);
    r->add_flag("--no-labels", ren.no_labels);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInput;
    }

    try {
        if (*g) return gen.run();
        if (*c) return con.run();
        if (*s) return sol.run();
        if (*v) return ver.run();
        if (*scan) return sc.run();
        if (*r) return ren.run();
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failure: " << e.what() << '\n';
        return kVerify;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInput;
    } catch (const SearchFailure& e) {
        std::cerr << "search failure: " << e.what() << '\n';
        return kSearch;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kSearch;
    }
    return kInput;
}
