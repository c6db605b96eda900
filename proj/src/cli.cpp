#include "fuzzycat/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "fuzzycat/analysis.hpp"
#include "fuzzycat/category.hpp"
#include "fuzzycat/constructions.hpp"
#include "fuzzycat/errors.hpp"
#include "fuzzycat/formats.hpp"
#include "fuzzycat/report.hpp"

namespace fuzzycat {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ReportFormat parse_format(const std::string& name) {
    if (name == "text") return ReportFormat::Text;
    if (name == "machine") return ReportFormat::Machine;
    throw Error("unknown format: " + name);
}

TNorm parse_tnorm_flag(const std::string& name) {
    auto t = TNorm::from_name(name);
    if (!t) throw Error("unknown t-norm: " + name);
    return *t;
}

nlohmann::json to_json(const ViolationReport& report) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& v : report.violations)
        list.push_back({{"arrows", v.arrows},
                        {"expected", v.expected},
                        {"found", v.found},
                        {"law", law_name(v.law)}});
    return list;
}

nlohmann::json to_json(const PreorderReport& report) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& v : report.violations)
        list.push_back(
            {{"elements", v.elements},
             {"expected", v.expected},
             {"found", v.found},
             {"kind", v.kind == PreorderViolationKind::Reflexivity ? "Reflexivity"
                                                                   : "Transitivity"}});
    return list;
}

nlohmann::json to_json(const SostakReport& report) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& v : report.violations)
        list.push_back({{"condition", v.condition},
                        {"expected", v.expected},
                        {"found", v.found},
                        {"ids", v.ids}});
    return list;
}

CategoryPath split_path(const std::string& spec) {
    CategoryPath path;
    std::istringstream in(spec);
    std::string id;
    while (std::getline(in, id, ','))
        if (!id.empty()) path.arrow_ids.push_back(id);
    return path;
}

struct Options {
    std::string file;
    std::string format = "text";
    std::string law;
    std::string tnorm;
    std::string mode = "exactly-one";
    std::string annotation;
    std::vector<std::string> paths;
    std::string object_a, object_b;
    std::string arrow;
    int max_len = 3;
};

int emit(const ReportDocument& doc, const Options& opt, std::ostream& out,
         bool failed) {
    out << doc.render(parse_format(opt.format));
    return failed ? 1 : 0;
}

int cmd_validate(const Options& opt, std::ostream& out) {
    std::string text = read_file(opt.file);
    FuzzyCategory c = parse_category_file(text);
    if (!opt.law.empty()) c.law_mode = opt.law == "lax" ? LawMode::Lax : LawMode::Strict;
    if (!opt.tnorm.empty()) c.tnorm = parse_tnorm_flag(opt.tnorm);

    ViolationReport report = validate_axioms(c);
    ReportDocument doc;
    doc.command = "validate";
    doc.input_digest = input_digest(text);
    doc.verdict = report.ok() ? "pass" : "fail";
    doc.body["law"] = c.law_mode == LawMode::Strict ? "strict" : "lax";
    doc.body["tnorm"] = c.tnorm.name();
    doc.body["violations"] = to_json(report);
    return emit(doc, opt, out, !report.ok());
}

int cmd_commute(const Options& opt, std::ostream& out) {
    if (opt.paths.size() != 2) throw Error("commute needs exactly two --path flags");
    std::string text = read_file(opt.file);
    FuzzyCategory c = parse_category_file(text);
    CommutationResult r =
        commutation(c, split_path(opt.paths[0]), split_path(opt.paths[1]));

    ReportDocument doc;
    doc.command = "commute";
    doc.input_digest = input_digest(text);
    doc.verdict = "value";
    doc.body["commutes"] = r.commutes;
    doc.body["composite1"] = r.composite1;
    doc.body["composite2"] = r.composite2;
    doc.body["min1"] = r.min1.str();
    doc.body["min2"] = r.min2.str();
    doc.body["nu"] = r.nu.str();
    doc.body["strong"] = r.strong;
    return emit(doc, opt, out, !r.commutes);
}

int cmd_iso(const Options& opt, std::ostream& out) {
    std::string text = read_file(opt.file);
    FuzzyCategory c = parse_category_file(text);
    auto witness = isomorphism_degree(c, opt.object_a, opt.object_b);

    ReportDocument doc;
    doc.command = "iso";
    doc.input_digest = input_digest(text);
    doc.verdict = "value";
    doc.body["isomorphic"] = witness.has_value();
    doc.body["objects"] = {opt.object_a, opt.object_b};
    if (witness)
        doc.body["witness"] = {
            {"degree", witness->degree.str()}, {"f", witness->f}, {"g", witness->g}};
    return emit(doc, opt, out, !witness);
}

int cmd_monic_epic(const Options& opt, std::ostream& out, bool monic) {
    std::string text = read_file(opt.file);
    FuzzyCategory c = parse_category_file(text);
    MonicEpicResult r = monic ? is_monic(c, opt.arrow) : is_epic(c, opt.arrow);

    ReportDocument doc;
    doc.command = monic ? "monic" : "epic";
    doc.input_digest = input_digest(text);
    doc.verdict = "value";
    doc.body["arrow"] = r.arrow;
    doc.body["holds"] = r.holds;
    doc.body["nu"] = r.nu.str();
    if (r.counterexample)
        doc.body["counterexample"] = {r.counterexample->first, r.counterexample->second};
    return emit(doc, opt, out, !r.holds);
}

int cmd_limits(const Options& opt, std::ostream& out) {
    std::string text = read_file(opt.file);
    FuzzyCategory c = parse_category_file(text);
    LimitMode mode = opt.mode == "degree-one" ? LimitMode::ExactlyOneDegreeOneArrow
                                              : LimitMode::ExactlyOneArrow;
    ReportDocument doc;
    doc.command = "limits";
    doc.input_digest = input_digest(text);
    doc.verdict = "value";
    doc.body["initial"] = find_initial(c, mode);
    doc.body["mode"] = opt.mode;
    doc.body["terminal"] = find_terminal(c, mode);
    return emit(doc, opt, out, false);
}

int cmd_from_graph(const Options& opt, std::ostream& out) {
    std::string text = read_file(opt.file);
    FuzzyGraph g = parse_graph_file(text);
    GraphReport graph_report = validate_graph(g);
    if (!graph_report.ok()) {
        ReportDocument doc;
        doc.command = "from-graph";
        doc.input_digest = input_digest(text);
        doc.verdict = "fail";
        nlohmann::json list = nlohmann::json::array();
        for (const auto& v : graph_report.violations)
            list.push_back({{"detail", v.detail}, {"subject", v.subject}});
        doc.body["violations"] = list;
        return emit(doc, opt, out, true);
    }
    FreeCategoryResult result = free_fuzzy_category(g, opt.max_len);
    out << render_category(result.category);
    if (!result.truncated.empty()) {
        out << "# truncated composites (length bound " << opt.max_len << "):\n";
        for (const auto& [g_id, f_id] : result.truncated)
            out << "# truncated: " << g_id << " . " << f_id << "\n";
    }
    return 0;
}

int cmd_from_relation(const Options& opt, std::ostream& out) {
    std::string text = read_file(opt.file);
    FuzzyRelation r = parse_relation_file(text);
    TNorm t = opt.tnorm.empty() ? TNorm::min() : parse_tnorm_flag(opt.tnorm);
    PreorderReport report = validate_preorder(r, t);
    if (!report.ok()) {
        ReportDocument doc;
        doc.command = "from-relation";
        doc.input_digest = input_digest(text);
        doc.verdict = "fail";
        doc.body["tnorm"] = t.name();
        doc.body["violations"] = to_json(report);
        return emit(doc, opt, out, true);
    }
    out << render_category(preorder_category(r, t));
    return 0;
}

int cmd_sostak(const Options& opt, std::ostream& out) {
    std::string text = read_file(opt.file);
    FuzzyCategory c = parse_category_file(text);

    SostakAnnotation ann;
    if (!opt.annotation.empty()) {
        ann = parse_annotation_file(read_file(opt.annotation));
        if (!opt.tnorm.empty()) ann.star = parse_tnorm_flag(opt.tnorm);
    } else {
        // canonical bridge: omega = 1 everywhere, mu = plausibility
        ann.star = opt.tnorm.empty() ? TNorm::min() : parse_tnorm_flag(opt.tnorm);
        for (const auto& obj : c.objects) ann.omega[obj] = Degree::one();
        for (const auto& a : c.arrows) ann.mu[a.id] = a.plausibility;
    }

    SostakReport report = sostak_check(c, ann);
    ReportDocument doc;
    doc.command = "sostak";
    doc.input_digest = input_digest(text);
    doc.verdict = report.ok() ? "pass" : "fail";
    doc.body["star"] = ann.star.name();
    doc.body["violations"] = to_json(report);
    return emit(doc, opt, out, !report.ok());
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"verification toolkit for finite fuzzy categories", "fuzzycat"};
    app.require_subcommand(1);
    Options opt;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "text|machine")
            ->check(CLI::IsMember({"text", "machine"}));
    };

    auto* validate = app.add_subcommand("validate", "check the category axioms");
    validate->add_option("file", opt.file)->required();
    validate->add_option("--law", opt.law)->check(CLI::IsMember({"strict", "lax"}));
    validate->add_option("--tnorm", opt.tnorm)
        ->check(CLI::IsMember({"min", "product", "lukasiewicz"}));
    add_format(validate);

    auto* commute = app.add_subcommand("commute", "analyze a diagram of two paths");
    commute->add_option("file", opt.file)->required();
    commute
        ->add_option("--path", opt.paths,
                     "comma-separated arrow ids, first-applied first")
        ->required();
    add_format(commute);

    auto* iso = app.add_subcommand("iso", "isomorphism degree of two objects");
    iso->add_option("file", opt.file)->required();
    iso->add_option("a", opt.object_a)->required();
    iso->add_option("b", opt.object_b)->required();
    add_format(iso);

    auto* monic = app.add_subcommand("monic", "monic test for an arrow");
    monic->add_option("file", opt.file)->required();
    monic->add_option("arrow", opt.arrow)->required();
    add_format(monic);

    auto* epic = app.add_subcommand("epic", "epic test for an arrow");
    epic->add_option("file", opt.file)->required();
    epic->add_option("arrow", opt.arrow)->required();
    add_format(epic);

    auto* limits = app.add_subcommand("limits", "find initial and terminal objects");
    limits->add_option("file", opt.file)->required();
    limits->add_option("--mode", opt.mode)
        ->check(CLI::IsMember({"exactly-one", "degree-one"}));
    add_format(limits);

    auto* from_graph =
        app.add_subcommand("from-graph", "materialize the free fuzzy category");
    from_graph->add_option("file", opt.file)->required();
    from_graph->add_option("--max-len", opt.max_len)->check(CLI::PositiveNumber);
    add_format(from_graph);

    auto* from_relation =
        app.add_subcommand("from-relation", "build a fuzzy preorder category");
    from_relation->add_option("file", opt.file)->required();
    from_relation->add_option("--tnorm", opt.tnorm)
        ->check(CLI::IsMember({"min", "product", "lukasiewicz"}));
    add_format(from_relation);

    auto* sostak = app.add_subcommand("sostak", "check the L-fuzzy category conditions");
    sostak->add_option("file", opt.file)->required();
    sostak->add_option("--annotation", opt.annotation,
                       "omega/mu annotation file; defaults to omega=1, mu=plausibility");
    sostak->add_option("--tnorm", opt.tnorm)
        ->check(CLI::IsMember({"min", "product", "lukasiewicz"}));
    add_format(sostak);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (validate->parsed()) return cmd_validate(opt, out);
        if (commute->parsed()) return cmd_commute(opt, out);
        if (iso->parsed()) return cmd_iso(opt, out);
        if (monic->parsed()) return cmd_monic_epic(opt, out, true);
        if (epic->parsed()) return cmd_monic_epic(opt, out, false);
        if (limits->parsed()) return cmd_limits(opt, out);
        if (from_graph->parsed()) return cmd_from_graph(opt, out);
        if (from_relation->parsed()) return cmd_from_relation(opt, out);
        if (sostak->parsed()) return cmd_sostak(opt, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no command\n";
    return 2;
}

} // namespace fuzzycat
