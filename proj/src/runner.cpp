#include "transversal/runner.hpp"

#include <chrono>

#include "transversal/fingerprint.hpp"

namespace transversal {

using nlohmann::json;

namespace {

json dims_to_json(const GradedDims& dims)
{
    json obj = json::object();
    for (const auto& [key, v] : dims.table) {
        std::string k;
        for (std::size_t i = 0; i < key.size(); ++i) {
            if (i)
                k += ",";
            k += std::to_string(key[i]);
        }
        obj[k] = v;
    }
    return obj;
}

json verdict_to_json(const CheckVerdict& v)
{
    json w = nullptr;
    if (v.witness) {
        w = json::object();
        if (v.witness->p >= 0)
            w["p"] = v.witness->p;
        if (v.witness->q >= 0)
            w["q"] = v.witness->q;
        if (v.witness->n >= 0)
            w["n"] = v.witness->n;
        if (v.witness->degree >= 0)
            w["degree"] = v.witness->degree;
        w["mismatch"] = v.witness->mismatch;
    }
    return json{{"status", to_string(v.status)},
                {"bounds",
                 {{"pmax", v.bounds.pmax},
                  {"qmax", v.bounds.qmax},
                  {"nmax", v.bounds.nmax},
                  {"dmax", v.bounds.dmax}}},
                {"witness", w},
                {"note", v.note},
                {"evidence",
                 {{"left", dims_to_json(v.leftEvidence)}, {"right", dims_to_json(v.rightEvidence)}}}};
}

std::string verdict_line(const std::string& what, const CheckVerdict& v)
{
    std::string s = what + ": " + to_string(v.status);
    if (v.witness)
        s += " [witness: " + v.witness->mismatch + "]";
    if (!v.note.empty())
        s += " (" + v.note + ")";
    return s;
}

struct Executor {
    const SessionScript& script;
    const RunOptions& opts;
    int index = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw CommandError(index, msg); }

    const SessionCommand& cmd() const { return script.commands[static_cast<std::size_t>(index)]; }

    int named_int(const std::string& key, int fallback) const
    {
        auto it = cmd().named.find(key);
        if (it == cmd().named.end())
            return fallback;
        try {
            return std::stoi(it->second);
        } catch (...) {
            fail("bad integer for " + key + "='" + it->second + "'");
        }
    }

    CheckOptions bounds() const
    {
        CheckOptions b = opts.checks;
        b.pmax = named_int("pmax", b.pmax);
        b.qmax = named_int("qmax", b.qmax);
        b.nmax = named_int("nmax", b.nmax);
        b.dmax = named_int("dmax", b.dmax);
        b.jobs = named_int("jobs", b.jobs);
        return b;
    }

    const std::string& positional(std::size_t i) const
    {
        if (i >= cmd().positionals.size())
            fail("missing operand " + std::to_string(i + 1));
        return cmd().positionals[i];
    }

    IdealHandle ideal_operand(std::size_t i) const
    {
        const std::string& name = positional(i);
        auto it = script.env.ideals.find(name);
        if (it == script.env.ideals.end())
            fail("'" + name + "' is not an ideal");
        return it->second;
    }

    ModulePresentation module_operand(std::size_t i) const
    {
        const std::string& name = positional(i);
        if (auto it = script.env.modules.find(name); it != script.env.modules.end())
            return it->second;
        if (auto it = script.env.ideals.find(name); it != script.env.ideals.end())
            return ModulePresentation::ideal_as_module(it->second);
        if (auto it = script.env.rings.find(name); it != script.env.rings.end())
            return ModulePresentation::ring_as_module(it->second);
        fail("'" + name + "' does not name a module, ideal, or ring");
    }

    ModulePresentation module_or_ring_default(std::size_t i, const RingPtr& ring) const
    {
        if (i < cmd().positionals.size())
            return module_operand(i);
        return ModulePresentation::ring_as_module(ring);
    }

    std::vector<std::vector<std::string>> named_groups(const std::string& key) const
    {
        auto it = cmd().named.find(key);
        if (it == cmd().named.end())
            fail("missing " + key + "=(...) argument");
        const std::string& v = it->second;
        std::vector<std::vector<std::string>> groups;
        std::size_t pos = 0;
        while (pos < v.size()) {
            if (v[pos] != '(')
                fail("bad group syntax in " + key);
            std::size_t close = v.find(')', pos);
            if (close == std::string::npos)
                fail("unbalanced group in " + key);
            std::string inner = v.substr(pos + 1, close - pos - 1);
            std::vector<std::string> items;
            std::size_t p = 0;
            while (p <= inner.size()) {
                std::size_t comma = inner.find(',', p);
                if (comma == std::string::npos) {
                    if (p < inner.size())
                        items.push_back(inner.substr(p));
                    break;
                }
                items.push_back(inner.substr(p, comma - p));
                p = comma + 1;
            }
            groups.push_back(std::move(items));
            pos = close + 1;
        }
        return groups;
    }

    Report execute()
    {
        Report report;
        report.index = index;
        report.command = cmd().echo;
        auto t0 = std::chrono::steady_clock::now();

        const std::string& verb = cmd().verb;
        try {
            if (verb == "groebner")
                run_groebner(report);
            else if (verb == "intersect")
                run_intersect(report);
            else if (verb == "hilbert")
                run_hilbert(report);
            else if (verb == "relation_type")
                run_relation_type(report);
            else if (verb == "rees_ideal")
                run_rees(report);
            else if (verb == "multi_rees")
                run_multi_rees(report);
            else if (verb == "assoc_graded")
                run_assoc_graded(report);
            else if (verb == "effective_dims")
                run_effective_dims(report);
            else if (verb == "tor")
                run_tor(report);
            else if (verb == "transversality")
                run_transversality(report);
            else if (verb == "tor2_clause")
                run_tor2_clause(report);
            else if (verb == "sigma_iso")
                run_sigma_iso(report);
            else if (verb == "pi_iso")
                run_pi_iso(report);
            else if (verb == "rt_bound")
                run_rt_bound(report);
            else if (verb == "flatness")
                run_flatness(report);
            else if (verb == "artin_rees")
                run_artin_rees(report);
            else if (verb == "sample_maximal_rt")
                run_sample_maximal_rt(report);
            else
                fail("unhandled command '" + verb + "'");
        } catch (const CommandError&) {
            throw;
        } catch (const Error& e) {
            fail(e.what());
        }

        auto t1 = std::chrono::steady_clock::now();
        report.wallMs = std::chrono::duration<double, std::milli>(t1 - t0).count();

        std::string material = report.command;
        for (const auto& name : cmd().positionals) {
            auto it = script.env.declEcho.find(name);
            if (it != script.env.declEcho.end())
                material += "|" + it->second;
        }
        report.fingerprint = fnv1a64_hex(material);
        return report;
    }

    void run_groebner(Report& r)
    {
        IdealHandle I = ideal_operand(0);
        TermOrder ord = I.ring()->default_order();
        auto it = cmd().named.find("order");
        if (it != cmd().named.end()) {
            if (it->second == "lex")
                ord = TermOrder::lex();
            else if (it->second == "degrevlex")
                ord = TermOrder::degrevlex();
            else
                fail("unknown order '" + it->second + "'");
        }
        const GroebnerBasis& gb = I.groebner(ord);
        json basis = json::array();
        for (const auto& e : gb.elements) {
            basis.push_back(print_polynomial(e[0]));
            r.lines.push_back("  " + print_polynomial(e[0]));
        }
        r.result = json{{"order", ord.name()}, {"basis", basis}};
        r.lines.insert(r.lines.begin(), "reduced groebner basis (" + ord.name() + "), " +
                                            std::to_string(gb.elements.size()) + " element(s):");
    }

    void run_intersect(Report& r)
    {
        IdealHandle I = ideal_operand(0);
        IdealHandle J = ideal_operand(1);
        IdealHandle meet = ideal_intersection(I, J);
        json gens = json::array();
        std::string line = "intersection: (";
        for (std::size_t i = 0; i < meet.generators().size(); ++i) {
            std::string t = print_polynomial(meet.generators()[i]);
            gens.push_back(t);
            line += (i ? ", " : "") + t;
        }
        r.result = json{{"generators", gens}};
        r.lines.push_back(line + ")");
    }

    void run_hilbert(Report& r)
    {
        const std::string& name = positional(0);
        long maxdeg = named_int("maxdeg", 6);
        GradedDims dims;
        if (auto it = script.env.ideals.find(name); it != script.env.ideals.end())
            dims = hilbert_dims(it->second, maxdeg);
        else
            dims = hilbert_dims(module_operand(0), maxdeg);
        json arr = json::array();
        std::string line = "dims 0.." + std::to_string(maxdeg) + ":";
        for (long d = 0; d <= maxdeg; ++d) {
            arr.push_back(dims.at({static_cast<int>(d)}));
            line += " " + std::to_string(dims.at({static_cast<int>(d)}));
        }
        r.result = json{{"maxdeg", maxdeg}, {"dims", arr}};
        r.lines.push_back(line);
    }

    void run_relation_type(Report& r)
    {
        IdealHandle I = ideal_operand(0);
        long dmax = named_int("dmax", static_cast<int>(opts.checks.dmax));
        RelationTypeResult res;
        if (cmd().positionals.size() > 1) {
            ModulePresentation M = module_operand(1);
            res = relation_type(I, M, named_int("bound", opts.moduleRtBound), dmax);
        } else {
            res = relation_type(I, dmax);
        }
        json tdegs = json::array();
        for (int t : res.minimalGeneratorTDegrees)
            tdegs.push_back(t);
        r.result = json{{"rt", res.rt},
                        {"minimal_generator_tdegrees", tdegs},
                        {"effective_dims", dims_to_json(res.effectiveDims)},
                        {"truncation_bound", res.truncationBound},
                        {"stabilized", res.stabilized}};
        std::string line = "rt = " + std::to_string(res.rt);
        if (res.truncationBound > 0)
            line += " (computed up to T-degree " + std::to_string(res.truncationBound) +
                    (res.stabilized ? ", stabilized" : ", NOT stabilized") + ")";
        r.lines.push_back(line);
    }

    void run_rees(Report& r)
    {
        IdealHandle I = ideal_operand(0);
        BigradedIdealHandle H = rees_ideal(I);
        json gens = json::array();
        for (const auto& g : H.definingIdeal.generators()) {
            gens.push_back(print_polynomial(g));
            r.lines.push_back("  " + print_polynomial(g));
        }
        json tvars = json::array();
        for (const auto& t : H.tVariables)
            tvars.push_back(t);
        r.result = json{{"t_variables", tvars}, {"defining_ideal", gens}};
        r.lines.insert(r.lines.begin(), "rees defining ideal, " +
                                            std::to_string(H.definingIdeal.generators().size()) +
                                            " generator(s):");
    }

    void run_multi_rees(Report& r)
    {
        IdealHandle I = ideal_operand(0);
        IdealHandle J = ideal_operand(1);
        BigradedIdealHandle H = multi_rees_ideal(I, J);
        json gens = json::array();
        for (const auto& g : H.definingIdeal.generators()) {
            gens.push_back(print_polynomial(g));
            r.lines.push_back("  " + print_polynomial(g));
        }
        json tvars = json::array();
        for (const auto& t : H.tVariables)
            tvars.push_back(t);
        r.result = json{{"t_variables", tvars},
                        {"u_block", H.uBlockSize},
                        {"defining_ideal", gens}};
        r.lines.insert(r.lines.begin(), "multi-rees defining ideal, " +
                                            std::to_string(H.definingIdeal.generators().size()) +
                                            " generator(s):");
    }

    void run_assoc_graded(Report& r)
    {
        IdealHandle I = ideal_operand(0);
        int maxdeg = named_int("maxdeg", 6);
        BigradedIdealHandle H = assoc_graded_presentation(I);
        json gens = json::array();
        for (const auto& g : H.definingIdeal.generators())
            gens.push_back(print_polynomial(g));
        GradedDims dims = bigraded_quotient_tdeg_dims(H, maxdeg);
        json arr = json::array();
        std::string line = "tdeg dims 0.." + std::to_string(maxdeg) + ":";
        for (int d = 0; d <= maxdeg; ++d) {
            arr.push_back(dims.at({d}));
            line += " " + std::to_string(dims.at({d}));
        }
        r.result = json{{"defining_ideal", gens}, {"tdeg_dims", arr}, {"maxdeg", maxdeg}};
        r.lines.push_back("associated graded presentation with " +
                          std::to_string(H.definingIdeal.generators().size()) + " generator(s)");
        r.lines.push_back(line);
    }

    void run_effective_dims(Report& r)
    {
        IdealHandle I = ideal_operand(0);
        int n = named_int("n", 1);
        long dmax = named_int("dmax", static_cast<int>(opts.checks.dmax));
        GradedDims dims = effective_relations_dims(I, n, dmax);
        r.result = json{{"n", n}, {"dims", dims_to_json(dims)}};
        r.lines.push_back("effective relations E_" + std::to_string(n) + ": " +
                          (dims.all_zero() ? "zero" : dims_to_json(dims).dump()));
    }

    void run_tor(Report& r)
    {
        int idx = named_int("index", 1);
        long dmax = named_int("dmax", static_cast<int>(opts.checks.dmax));
        TorResult res;
        if (idx == 1) {
            res = tor1(ideal_operand(0), module_operand(1), dmax);
        } else if (idx == 2) {
            res = tor2_cyclic(ideal_operand(0), ideal_operand(1), dmax);
        } else {
            fail("tor index must be 1 or 2");
        }
        r.result = json{{"index", res.index},
                        {"is_zero", res.isZero},
                        {"dims", dims_to_json(res.gradedDims)}};
        r.lines.push_back("Tor_" + std::to_string(res.index) + " is " +
                          (res.isZero ? "zero" : "nonzero; dims " +
                                                     dims_to_json(res.gradedDims).dump()));
    }

    void run_transversality(Report& r)
    {
        IdealHandle I = ideal_operand(0);
        IdealHandle J = ideal_operand(1);
        ModulePresentation M = module_or_ring_default(2, I.ring());
        TransversalityReport rep = check_transversality(I, J, M, bounds());
        r.result = json{{"condition_i", verdict_to_json(rep.conditionI)},
                        {"condition_ii", verdict_to_json(rep.conditionII)},
                        {"agree", rep.agree}};
        r.lines.push_back(verdict_line("condition (i), phi-bar isomorphism", rep.conditionI));
        r.lines.push_back(verdict_line("condition (ii), Tor_1 vanishing", rep.conditionII));
        r.lines.push_back(std::string("sides agree: ") + (rep.agree ? "yes" : "NO"));
        if (!rep.agree) {
            r.internalDisagreement = true;
            r.lines.push_back("INTERNAL DISAGREEMENT: the proven equivalence split; "
                              "evidence tables follow");
            r.lines.push_back("  left: " + dims_to_json(rep.conditionI.leftEvidence).dump());
            r.lines.push_back("  right: " + dims_to_json(rep.conditionII.leftEvidence).dump());
        }
    }

    void run_tor2_clause(Report& r)
    {
        IdealHandle I = ideal_operand(0);
        IdealHandle J = ideal_operand(1);
        Tor2ClauseReport rep = check_tor2_clause(I, J, bounds());
        r.result = json{{"tor_side", verdict_to_json(rep.torSide)},
                        {"phi_side", verdict_to_json(rep.phiSide)},
                        {"agree", rep.agree}};
        r.lines.push_back(verdict_line("Tor_1 and Tor_2 vanishing", rep.torSide));
        r.lines.push_back(verdict_line("gr_I tensor gr_J -> gr_{I+J}", rep.phiSide));
        r.lines.push_back(std::string("sides agree: ") + (rep.agree ? "yes" : "NO"));
        if (!rep.agree)
            r.internalDisagreement = true;
    }

    void run_sigma_iso(Report& r)
    {
        IdealHandle I = ideal_operand(0);
        IdealHandle J = ideal_operand(1);
        ModulePresentation M = module_or_ring_default(2, I.ring());
        CheckVerdict v = check_sigma_iso(I, J, M, bounds());
        r.result = verdict_to_json(v);
        r.lines.push_back(verdict_line("sigma-bar isomorphism", v));
    }

    void run_pi_iso(Report& r)
    {
        IdealHandle I = ideal_operand(0);
        IdealHandle J = ideal_operand(1);
        ModulePresentation M = module_or_ring_default(2, I.ring());
        CheckVerdict v = check_pi_iso(I, J, M, bounds());
        r.result = verdict_to_json(v);
        r.lines.push_back(verdict_line("pi-bar isomorphism", v));
    }

    void run_rt_bound(Report& r)
    {
        IdealHandle I = ideal_operand(0);
        IdealHandle J = ideal_operand(1);
        ModulePresentation M = module_or_ring_default(2, I.ring());
        CheckVerdict v = check_rt_tensor_bound(I, J, M, bounds());
        r.result = verdict_to_json(v);
        r.lines.push_back(verdict_line("rt tensor bound", v));
    }

    void run_flatness(Report& r)
    {
        IdealHandle P = ideal_operand(0);
        ModulePresentation M = module_or_ring_default(1, P.ring());
        auto groups = named_groups("seq");
        if (groups.size() != 1)
            fail("seq expects one group of polynomials");
        std::vector<Polynomial> xs;
        for (const auto& t : groups[0]) {
            try {
                xs.push_back(parse_polynomial(t, P.ring()));
            } catch (const ParseError& e) {
                fail(std::string("in seq entry '") + t + "': " + e.what());
            }
        }
        CheckVerdict v = check_flatness_criterion(P, xs, M, bounds());
        r.result = verdict_to_json(v);
        r.lines.push_back(verdict_line("flatness criterion", v));
    }

    void run_artin_rees(Report& r)
    {
        IdealHandle m = ideal_operand(0);
        ModulePresentation M = module_operand(1);
        ModulePresentation N = module_operand(2);
        int nmax = named_int("nmax", opts.artinReesNmax);
        ArResult res = strong_uniform_number(m, M, N, nmax);
        json table = json::array();
        for (const auto& [n, lhs, rhs] : res.table)
            table.push_back(json{{"n", n}, {"lhs", lhs}, {"rhs", rhs}});
        r.result = json{{"found", res.found},
                        {"s", res.found ? json(res.s) : json(nullptr)},
                        {"nmax", res.nmax},
                        {"table", table}};
        if (res.found)
            r.lines.push_back("uniform Artin-Rees number s = " + std::to_string(res.s) +
                              ", certified for n in [" + std::to_string(res.s) + ", " +
                              std::to_string(res.nmax) + "] (uniform up to nmax, not beyond)");
        else
            r.lines.push_back("NOT_FOUND_UP_TO(" + std::to_string(res.nmax) + ")");
    }

    void run_sample_maximal_rt(Report& r)
    {
        const std::string& ringName = positional(0);
        auto it = script.env.rings.find(ringName);
        if (it == script.env.rings.end())
            fail("'" + ringName + "' is not a ring");
        RingPtr A = it->second;
        ModulePresentation M = module_or_ring_default(1, A);
        auto groups = named_groups("points");
        std::vector<std::vector<Rational>> points;
        for (const auto& g : groups) {
            std::vector<Rational> pt;
            for (const auto& t : g) {
                try {
                    pt.push_back(rational_from_string(t));
                } catch (const Error& e) {
                    fail(std::string("bad coordinate '") + t + "': " + e.what());
                }
            }
            points.push_back(std::move(pt));
        }
        SampleMaxResult res = sample_maximal_rt(A, M, points, opts.moduleRtBound);
        json samples = json::array();
        for (const auto& s : res.samples) {
            json coords = json::array();
            std::string line = "  rt at (";
            for (std::size_t i = 0; i < s.point.size(); ++i) {
                coords.push_back(rational_to_string(s.point[i]));
                line += (i ? "," : "") + rational_to_string(s.point[i]);
            }
            samples.push_back(json{{"point", coords}, {"rt", s.rt}});
            r.lines.push_back(line + ") = " + std::to_string(s.rt));
        }
        r.result = json{{"samples", samples}, {"max_rt", res.maxRt}};
        r.lines.insert(r.lines.begin(),
                       "sampled maximal-ideal relation types, max = " + std::to_string(res.maxRt));
    }
};

}  // namespace

std::vector<Report> run_session(const SessionScript& script, const RunOptions& opts)
{
    std::vector<Report> reports;
    Executor ex{script, opts};
    for (int i = 0; i < static_cast<int>(script.commands.size()); ++i) {
        ex.index = i;
        reports.push_back(ex.execute());
    }
    return reports;
}

json report_to_json(const Report& report)
{
    return json{{"schema", 1},
                {"engine", kEngineVersion},
                {"index", report.index},
                {"command", report.command},
                {"fingerprint", report.fingerprint},
                {"result", report.result},
                {"wall_ms", report.wallMs}};
}

std::string render_report_text(const Report& report)
{
    std::string out = "## [" + std::to_string(report.index + 1) + "] " + report.command + "\n";
    for (const auto& line : report.lines)
        out += line + "\n";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "-- %.1f ms, inputs %s\n", report.wallMs,
                  report.fingerprint.c_str());
    out += buf;
    return out;
}

std::vector<std::pair<std::string, std::string>> selftest_scripts()
{
    std::vector<std::pair<std::string, std::string>> scripts;

    scripts.emplace_back("singular_curve_transversality", R"(
# A = QQ[z,t]/(zt), I = (z), J = (t): sigma-bar is an isomorphism,
# pi-bar is not, and the two equivalence sides agree on the failure.
ring B = QQ[z,t] / (z*t);
ideal I = (z);
ideal J = (t);
run sigma_iso I J nmax=6 dmax=10;
run pi_iso I J pmax=3 qmax=3 dmax=10;
run transversality I J pmax=3 qmax=3 dmax=10;
run tor2_clause I J pmax=3 qmax=3 dmax=10;
run tor I J index=2 dmax=10;
)");

    scripts.emplace_back("relation_types", R"(
ring A = QQ[x,y];
ideal m = (x, y);
ideal m2 = (x^2, x*y, y^2);
run relation_type m;
run relation_type m2;
run rees_ideal m2;
run effective_dims m2 n=2;
ring B = QQ[z,t] / (z*t);
ideal n = (z, t);
run relation_type n;
run rees_ideal n;
run assoc_graded n maxdeg=5;
)");

    scripts.emplace_back("artin_rees_probe", R"(
ring A = QQ[x];
ideal m = (x);
module M = submodule(A^1; [1]);
module N2 = submodule(A^1; [x^2]);
module N1 = submodule(A^1; [x]);
run artin_rees m M N2 nmax=8;
run artin_rees m M N1 nmax=8;
)");

    scripts.emplace_back("uniform_bound_sampling", R"(
ring A = QQ[x,y];
run sample_maximal_rt A points=(0,0)(1,2)(-1,3)(2,-5)(1/2,3);
ring B = QQ[z,t] / (z*t);
run sample_maximal_rt B points=(0,0)(1,0)(0,-2);
)");

    scripts.emplace_back("flatness_criterion", R"(
ring A = QQ[x,y,z];
ideal p = (y, z);
run flatness p seq=(x) pmax=2 qmax=2 dmax=8;
ring B = QQ[z,t] / (z*t);
ideal q = (t);
run flatness q seq=(z) pmax=2 qmax=2 dmax=8;
)");

    scripts.emplace_back("ideal_calculus", R"(
ring A = QQ[x,y];
ideal I = (x);
ideal J = (y);
run intersect I J;
run groebner I order=lex;
ideal sq = (x^2, x*y);
run hilbert sq maxdeg=5;
run tor I J index=1 dmax=8;
)");

    return scripts;
}

}  // namespace transversal
