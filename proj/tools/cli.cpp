#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "qschubert/verify.hpp"

namespace qs::cli {

namespace {

using json = nlohmann::json;

constexpr int kFrameBundleBound = 12;

// ---- parsing --------------------------------------------------------------

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    std::string t = s;
    if (t == "e" || t.empty()) return out;
    std::replace(t.begin(), t.end(), ',', ' ');
    std::istringstream in(t);
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            fail("SchemaError", "not an integer list: " + s);
        }
        if (used != tok.size()) fail("SchemaError", "not an integer list: " + s);
        out.push_back(v);
    }
    return out;
}

CartanData cartan_from_json(const json& j) {
    if (!j.is_object()) fail("SchemaError", "cartan must be an object");
    if (j.contains("gcm")) {
        if (!j["gcm"].is_array()) fail("SchemaError", "gcm must be an array of rows");
        IntMat m;
        for (const auto& row : j["gcm"]) {
            if (!row.is_array()) fail("SchemaError", "gcm rows must be arrays");
            IntVec r;
            for (const auto& x : row) {
                if (!x.is_number_integer()) fail("SchemaError", "gcm entries must be integers");
                r.push_back(x.get<Int>());
            }
            m.push_back(r);
        }
        return CartanData::from_gcm(m);
    }
    if (j.contains("type") && j.contains("rank")) {
        if (!j["type"].is_string() || j["type"].get<std::string>().size() != 1 || !j["rank"].is_number_integer())
            fail("SchemaError", "type must be one letter and rank an integer");
        return CartanData::builtin(j["type"].get<std::string>()[0], j["rank"].get<int>());
    }
    fail("SchemaError", "cartan needs either gcm or type and rank");
}

CartanData parse_cartan(const std::string& src) {
    if (src.empty()) return CartanData::builtin('A', 2);
    json j;
    if (src.front() == '{') {
        j = json::parse(src, nullptr, false);
    } else if (std::filesystem::exists(src)) {
        std::ifstream f(src);
        j = json::parse(f, nullptr, false);
    } else if (src.size() >= 2 && std::isalpha(static_cast<unsigned char>(src[0]))) {
        int rank = 0;
        try {
            std::size_t used = 0;
            rank = std::stoi(src.substr(1), &used);
            if (used != src.size() - 1) throw std::invalid_argument(src);
        } catch (const std::exception&) {
            fail("SchemaError", "cannot read cartan " + src);
        }
        return CartanData::builtin(src[0], rank);
    } else {
        fail("SchemaError", "cannot read cartan " + src);
    }
    if (j.is_discarded()) fail("SchemaError", "cartan is not valid JSON");
    return cartan_from_json(j);
}

// ---- serialization --------------------------------------------------------

json word_json(const Word& w) { return json(std::vector<int>(w.begin(), w.end())); }
json vec_json(const IntVec& v) { return json(std::vector<Int>(v.begin(), v.end())); }
json mat_json(const IntMat& m) {
    json a = json::array();
    for (const auto& r : m) a.push_back(vec_json(r));
    return a;
}

json torus_json(const TorusElement& x) {
    json a = json::array();
    for (const auto& [e, c] : x.terms()) a.push_back({{"e", vec_json(e)}, {"num", c.num_string()}, {"den", c.den_string()}});
    return a;
}

json cartan_json(const CartanData& c) { return {{"rank", c.rank()}, {"gcm", mat_json(c.gcm())}, {"d", vec_json(c.sym())}}; }

// ---- commands -------------------------------------------------------------

struct Globals {
    std::string cartan;
    std::string out;
    int jobs = 1;
};

WeylElement reduced_element(const CartanData& c, const std::string& s) {
    Word w = parse_ints(s);
    check_letters(c, w);
    return element_of_reduced_word(c, w);
}

WeylElement any_element(const CartanData& c, const std::string& s) {
    Word w = parse_ints(s);
    check_letters(c, w);
    return element_of_word(c, w);
}

json frame_json(const CartanData& c, const ToricFrame& f) {
    json labels = json::array();
    for (const FrameStep& st : f.steps)
        labels.push_back({{"step", st.k},
                          {"position", st.position},
                          {"interval", {st.c, st.d}},
                          {"prefix", st.c - 1},
                          {"u", word_json(st.u_k.word)},
                          {"weight", vec_json(st.mu)},
                          {"case", st.right ? "right" : "left"},
                          {"in_D", st.inD},
                          {"lambda_plus", vec_json(st.lambdaPlus)},
                          {"lambda_minus", vec_json(st.lambdaMinus)}});
    json useq = json::array();
    for (std::size_t k = 1; k < f.useq.size(); ++k) useq.push_back({{"k", k}, {"u", word_json(f.useq[k].word)}});
    json gens = json::array();
    for (int k : f.generators) gens.push_back({{"step", k}, {"position", f.pi.at(k)}});
    (void)c;
    return {{"pi", f.pi.perm},
            {"D_pi", f.D},
            {"u_sequence", useq},
            {"generators", gens},
            {"generator_positions", f.genPositions},
            {"labels", labels},
            {"bicharacter", mat_json(f.bichar)},
            {"bicharacter_by_position", mat_json(f.bicharByPosition)}};
}

json exponent_json(const ExponentMatrix& m) {
    return {{"word", word_json(m.word)},
            {"positive", m.positive},
            {"rows", m.rows},
            {"columns", m.N()},
            {"entries", mat_json(m.entries)}};
}

json suite_json(const SuiteResult& r, bool timings) {
    json checks = json::object();
    for (const auto& [k, v] : r.checks) checks[k] = {{"instances", v.instances}, {"failures", v.failures}};
    json j = {{"checks", checks},
              {"instances", r.instances()},
              {"failures", r.failures()},
              {"passed", r.passed()},
              {"samples", r.samples}};
    if (!r.notes.empty()) j["notes"] = r.notes;
    if (timings) j["seconds"] = r.seconds;
    return j;
}

json minor_reports_json(const std::vector<MinorFormulaReport>& reps, bool& pass) {
    json a = json::array();
    for (const auto& r : reps) {
        pass = pass && r.equal;
        a.push_back({{"k", r.k}, {"equal", r.equal}, {"lhs", torus_json(r.lhs)}, {"rhs", torus_json(r.rhs)}});
    }
    return a;
}

void emit(const Globals& g, const json& j, std::ostream& out) {
    std::string text = j.dump(2) + "\n";
    if (g.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(g.out, std::ios::binary);
    if (!f) fail("IOError", "cannot write " + g.out);
    f << text;
}

// job files name a command and its parameters; they are turned back into
// command-line arguments
std::vector<std::string> job_arguments(const std::string& path) {
    std::ifstream f(path);
    if (!f) fail("SchemaError", "cannot read job file " + path);
    json j = json::parse(f, nullptr, false);
    if (j.is_discarded() || !j.is_object()) fail("SchemaError", "job file is not a JSON object");
    for (const auto& [k, v] : j.items())
        if (k != "command" && k != "cartan" && k != "params" && k != "out" && k != "jobs")
            fail("SchemaError", "unknown job field " + k);
    if (!j.contains("command") || !j["command"].is_string()) fail("SchemaError", "job needs a command string");
    std::vector<std::string> args;
    if (j.contains("cartan")) {
        cartan_from_json(j["cartan"]);
        args.push_back("--cartan");
        args.push_back(j["cartan"].dump());
    }
    if (j.contains("out")) {
        if (!j["out"].is_string()) fail("SchemaError", "out must be a string");
        args.push_back("--out");
        args.push_back(j["out"].get<std::string>());
    }
    if (j.contains("jobs")) {
        if (!j["jobs"].is_number_integer()) fail("SchemaError", "jobs must be an integer");
        args.push_back("--jobs");
        args.push_back(std::to_string(j["jobs"].get<int>()));
    }
    std::istringstream cmd(j["command"].get<std::string>());
    std::string tok;
    while (cmd >> tok) {
        if (tok == "run") fail("SchemaError", "jobs cannot nest");
        args.push_back(tok);
    }
    if (j.contains("params")) {
        if (!j["params"].is_object()) fail("SchemaError", "params must be an object");
        for (const auto& [k, v] : j["params"].items()) {
            if (v.is_boolean()) {
                if (v.get<bool>()) args.push_back("--" + k);
                continue;
            }
            args.push_back("--" + k);
            if (v.is_array()) {
                std::string s;
                for (std::size_t i = 0; i < v.size(); ++i) {
                    if (!v[i].is_number_integer() && !v[i].is_string()) fail("SchemaError", "bad array in " + k);
                    if (i) s += ",";
                    s += v[i].is_string() ? v[i].get<std::string>() : std::to_string(v[i].get<Int>());
                }
                args.push_back(s.empty() ? "e" : s);
            } else if (v.is_string()) {
                args.push_back(v.get<std::string>());
            } else if (v.is_number_integer()) {
                args.push_back(std::to_string(v.get<Int>()));
            } else {
                fail("SchemaError", "unsupported parameter " + k);
            }
        }
    }
    return args;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Combinatorics and verification for quantum Schubert cells"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--cartan", g.cartan, "Cartan data: JSON, JSON file, or a type like A3 (default A2)");
    app.add_option("--out", g.out, "write the JSON result to this path");
    app.add_option("--jobs", g.jobs, "worker threads for sweeps")->check(CLI::PositiveNumber);

    auto* cartan_cmd = app.add_subcommand("cartan", "Cartan matrix and symmetrizer");

    std::string word_s, u_s, w_s, side = "right", which = "a", pi_s, suites_s, job_path;
    auto* word_cmd = app.add_subcommand("word", "Reducedness, roots and inverse of a word");
    word_cmd->add_option("--word", word_s)->required();

    auto* pos_cmd = app.add_subcommand("positive-subexpr", "Index set of the positive subexpression");
    pos_cmd->add_option("--word", word_s)->required();
    pos_cmd->add_option("--u", u_s)->required();
    pos_cmd->add_option("--side", side)->check(CLI::IsMember({"right", "left"}));

    auto* bruhat_cmd = app.add_subcommand("bruhat", "Bruhat comparison of two elements");
    bruhat_cmd->add_option("--u", u_s)->required();
    bruhat_cmd->add_option("--w", w_s)->required();

    auto* exp_cmd = app.add_subcommand("exponent-matrix", "a-, b- or inverse a-matrix");
    exp_cmd->add_option("--word", word_s)->required();
    exp_cmd->add_option("--u", u_s)->required();
    exp_cmd->add_option("--which", which)->check(CLI::IsMember({"a", "b", "ainv"}));

    bool all_pi = false;
    auto* frame_cmd = app.add_subcommand("frame", "Toric frame for one permutation or all of them");
    frame_cmd->add_option("--word", word_s)->required();
    frame_cmd->add_option("--u", u_s)->required();
    frame_cmd->add_option("--pi", pi_s, "comma-separated permutation (default identity)");
    frame_cmd->add_flag("--all", all_pi, "export one record per permutation (N <= 12)");

    int xi_n = 0;
    auto* xi_cmd = app.add_subcommand("xi-enumerate", "Permutations with interval prefixes");
    xi_cmd->add_option("--n", xi_n)->required()->check(CLI::Range(1, 20));

    auto* twist_cmd = app.add_subcommand("twist-check", "Reversal correspondences");
    twist_cmd->add_option("--word", word_s)->required();
    twist_cmd->add_option("--u", u_s)->required();

    int qm_m = 2, qm_n = 2;
    bool all_u = false;
    auto* qm_cmd = app.add_subcommand("qmatrix", "Quantum matrix oracle");
    qm_cmd->require_subcommand(1);
    auto* qm_verify = qm_cmd->add_subcommand("verify", "Check the minor formulas in the torus");
    qm_verify->add_option("--m", qm_m)->check(CLI::Range(1, 4));
    qm_verify->add_option("--n", qm_n)->check(CLI::Range(1, 4));
    qm_verify->add_option("--u", u_s, "ambient word of u (default identity)");
    qm_verify->add_flag("--all-u", all_u, "every u below w");

    SuiteBounds bounds;
    bool timings = false;
    auto* verify_cmd = app.add_subcommand("verify", "Run verification sweeps");
    verify_cmd->add_option("--suite", suites_s, "comma-separated suites, or all")->required();
    verify_cmd->add_option("--max-length", bounds.maxLength)->check(CLI::Range(0, 8));
    verify_cmd->add_option("--non-reduced-length", bounds.nonReducedLength)->check(CLI::Range(0, 6));
    verify_cmd->add_flag("--sampled-3x3", bounds.sampled3x3, "add sampled 3x3 quantum matrices");
    verify_cmd->add_option("--samples", bounds.samples)->check(CLI::PositiveNumber);
    verify_cmd->add_option("--seed", bounds.seed);
    verify_cmd->add_option("--torus-triples", bounds.torusTriples)->check(CLI::NonNegativeNumber);
    verify_cmd->add_flag("--timings", timings, "include wall-clock seconds (not reproducible)");

    auto* run_cmd = app.add_subcommand("run", "Execute a JSON job file");
    run_cmd->add_option("--job", job_path)->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        json j = {{"error", "SchemaError"}, {"message", e.what()}};
        err << j.dump() << "\n";
        return 2;
    }

    try {
        if (run_cmd->parsed()) return run(job_arguments(job_path), out, err);
        CartanData c = parse_cartan(g.cartan);
        bool failed = false;
        json result;
        if (cartan_cmd->parsed()) {
            result = cartan_json(c);
        } else if (word_cmd->parsed()) {
            Word w = parse_ints(word_s);
            check_letters(c, w);
            WeylElement x = element_of_word(c, w);
            result = {{"word", word_json(w)},
                      {"reduced", is_reduced(c, w)},
                      {"length", x.length()},
                      {"reduced_word", word_json(x.word)},
                      {"inverse", word_json(inverse(c, x).word)}};
            if (is_reduced(c, w)) {
                json roots = json::array();
                for (const auto& b : roots_of_word(c, w)) roots.push_back(vec_json(b));
                result["roots"] = roots;
            }
        } else if (pos_cmd->parsed()) {
            Word w = parse_ints(word_s);
            check_letters(c, w);
            WeylElement u = any_element(c, u_s);
            IndexSet D = side == "right" ? rp(c, w, u) : lp(c, w, u);
            bool product_ok = product_over(c, w, D, 1, static_cast<int>(w.size())) == u &&
                              is_positive(c, w, D, side == "right" ? Side::Right : Side::Left);
            result = {{"D", D}, {"product_ok", product_ok}};
        } else if (bruhat_cmd->parsed()) {
            WeylElement u = any_element(c, u_s), w = any_element(c, w_s);
            result = {{"u", word_json(u.word)},
                      {"w", word_json(w.word)},
                      {"leq", bruhat_leq(c, u, w)},
                      {"geq", bruhat_leq(c, w, u)}};
        } else if (exp_cmd->parsed()) {
            WeylElement w = reduced_element(c, word_s);
            WeylElement u = any_element(c, u_s);
            if (which == "a") {
                result = exponent_json(a_matrix(c, w.word, u));
                result["which"] = "a";
            } else if (which == "b") {
                result = exponent_json(b_matrix(c, w.word, u));
                result["which"] = "b";
            } else {
                ExponentMatrix a = a_matrix(c, w.word, u);
                result = {{"which", "ainv"}, {"rows", a.rows}, {"positive", a.positive},
                          {"word", word_json(a.word)}, {"entries", mat_json(a_inverse(c, w.word, u))}};
            }
        } else if (frame_cmd->parsed()) {
            Word w = parse_ints(word_s);
            check_letters(c, w);
            WeylElement u = any_element(c, u_s);
            int N = static_cast<int>(w.size());
            result = {{"word", word_json(w)}, {"u", word_json(u.word)}};
            if (all_pi) {
                if (N > kFrameBundleBound)
                    fail("BoundExceeded", "N = " + std::to_string(N) + " exceeds " + std::to_string(kFrameBundleBound) +
                                              "; pass --pi to build single frames");
                json frames = json::array();
                xi_for_each(N, [&](const PiElement& p) { frames.push_back(frame_json(c, frame_bicharacter(c, w, u, p))); });
                result["frames"] = frames;
                result["count"] = frames.size();
            } else {
                PiElement p = pi_s.empty() ? pi_identity(N) : make_pi(parse_ints(pi_s));
                result.update(frame_json(c, frame_bicharacter(c, w, u, p)));
            }
        } else if (xi_cmd->parsed()) {
            json perms = json::array();
            xi_for_each(xi_n, [&](const PiElement& p) { perms.push_back(p.perm); });
            result = {{"n", xi_n}, {"count", perms.size()}, {"perms", perms}};
        } else if (twist_cmd->parsed()) {
            WeylElement w = reduced_element(c, word_s);
            WeylElement u = any_element(c, u_s);
            TwistCorrespondence t = twist_indices(c, w.word, u);
            bool matrices = matrix_correspondence_check(c, w.word, u);
            int labels = reverse_sequence_mismatches(c, w.word, u);
            result = {{"word", word_json(t.word)},
                      {"reversed_word", word_json(t.reversedWord)},
                      {"u", word_json(t.u.word)},
                      {"u_inverse", word_json(t.uInverse.word)},
                      {"rp", t.rp},
                      {"lp", t.lp},
                      {"rp_reversed", t.rpRev},
                      {"lp_reversed", t.lpRev},
                      {"rp_to_lp", t.rpToLp},
                      {"lp_to_rp", t.lpToRp},
                      {"matrix_correspondence", matrices},
                      {"reverse_label_mismatches", labels}};
            failed = !t.holds() || !matrices || labels != 0;
        } else if (qm_cmd->parsed()) {
            QMatrixModel model = build_model(qm_m, qm_n);
            std::vector<WeylElement> us;
            if (all_u) {
                us = elements_below(model);
            } else {
                Word uw = parse_ints(u_s);
                check_letters(model.cartan, uw);
                us.push_back(element_of_word(model.cartan, uw));
            }
            json results = json::array();
            bool pass = true;
            for (const auto& u : us) {
                bool upass = true;
                json direct = minor_reports_json(verify_minor_formula_all(model, u), upass);
                json reverse = minor_reports_json(verify_minor_formula_reverse_all(model, u), upass);
                VanishingReport v = verify_vanishing(model, u);
                upass = upass && v.ok;
                results.push_back({{"u", word_json(u.word)},
                                   {"direct", direct},
                                   {"reverse", reverse},
                                   {"vanishing", {{"last_in_rp", v.lastInRP}, {"ok", v.ok}}},
                                   {"pass", upass}});
                pass = pass && upass;
            }
            result = {{"m", qm_m}, {"n", qm_n}, {"word", word_json(model.word)}, {"results", results}, {"pass", pass}};
            failed = !pass;
        } else if (verify_cmd->parsed()) {
            bounds.jobs = g.jobs;
            std::vector<std::string> names;
            std::string t = suites_s;
            std::replace(t.begin(), t.end(), ',', ' ');
            std::istringstream in(t);
            std::string s;
            while (in >> s) {
                if (s == "all") {
                    names.insert(names.end(), suite_names().begin(), suite_names().end());
                    continue;
                }
                if (s == "identities") s = "deg-identities";
                if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
                    fail("UnknownSuite", s);
                names.push_back(s);
            }
            json suites = json::object();
            for (const auto& n : names) {
                SuiteResult r = run_suite(n, bounds);
                suites[n] = suite_json(r, timings);
                failed = failed || !r.passed();
            }
            result = {{"suites", suites}, {"passed", !failed}};
        }
        emit(g, result, out);
        return failed ? 1 : 0;
    } catch (const Error& e) {
        err << json({{"error", e.code()}, {"message", e.what()}}).dump() << "\n";
        return 2;
    } catch (const json::exception& e) {
        err << json({{"error", "SchemaError"}, {"message", e.what()}}).dump() << "\n";
        return 2;
    }
}

}  // namespace qs::cli
