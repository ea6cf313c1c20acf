// arrpi: fundamental groups of real line arrangement complements.
//
// Exit codes: 0 success, 1 usage, 2..7 error category of the failing module
// (input, geometry, word, sweep, presentation, invariants), 8 when check-hom
// finds a relator that is not sent to the identity.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "arrpi/analysis.hpp"
#include "arrpi/errors.hpp"
#include "arrpi/export.hpp"
#include "arrpi/invariants.hpp"
#include "arrpi/io.hpp"
#include "arrpi/lac.hpp"
#include "arrpi/svg.hpp"
#include "arrpi/tietze.hpp"

using namespace arrpi;

namespace {

constexpr int kHomFailed = 8;

struct Job {
  std::string file;
  std::string presentation_file;
  std::string format = "text";
  bool trace = false;
  bool simplify = false;
  std::optional<std::size_t> budget;
  std::string weights;
  std::string points;
  std::string index;
  std::string images;
  std::string infinite_order;
  std::string subgroup;
  std::size_t max_cosets = 100000;
  std::string out;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) {
    auto b = cur.find_first_not_of(" \t\n");
    if (b == std::string::npos) continue;
    auto e = cur.find_last_not_of(" \t\n");
    out.push_back(cur.substr(b, e - b + 1));
  }
  return out;
}

nlohmann::json words_json(const GeometricBase& base) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& w : base.entries) out.push_back(to_string(w));
  return out;
}

void trace_event(const TraceEntry& e) {
  nlohmann::ordered_json j;
  j["event"] = e.record.event_index + 1;
  j["kind"] = e.record.kind == EventKind::Finite ? "finite" : "infinity";
  if (e.record.label) j["point"] = point_name(e.record.label);
  if (e.record.kind == EventKind::Finite)
    j["block"] = {e.record.first + 1, e.record.last + 1};
  else
    j["parallel"] = e.record.parallel;
  j["before"] = words_json(e.before);
  j["after"] = words_json(e.after);
  nlohmann::json rels = nlohmann::json::array();
  for (const auto& r : e.relations) rels.push_back(to_string(r.relator));
  j["relators"] = rels;
  std::cerr << j.dump() << "\n";
}

class Runner {
 public:
  explicit Runner(const Job& job) : job_(job), format_(parse_format(job.format)) {}

  int present() {
    emit(render(maybe_simplify(analysis().complement()), format_));
    return 0;
  }

  int meridians() {
    emit(render_meridians(analysis(), format_));
    return 0;
  }

  int orbifold() {
    const Analysis& a = analysis();
    OrbifoldPresentation op = orbifold_presentation(a.sweep, a.meridians, WeightVector::parse(job_.weights));
    if (job_.simplify && !op.symbolic())
      emit(render(maybe_simplify(op.concrete()), format_));
    else
      emit(render(op, format_));
    return 0;
  }

  int lac() {
    const Analysis& a = analysis();
    LacDatum datum = lac_datum(a, split(job_.points, ','), split(job_.index, ','));
    LacGroup g = lac_group(datum);
    Presentation p = maybe_simplify(g.presentation);
    if (format_ == Format::Json) {
      nlohmann::ordered_json j = nlohmann::ordered_json::parse(to_json(p));
      nlohmann::ordered_json steps = nlohmann::ordered_json::array();
      for (const auto& s : g.steps) steps.push_back({{"rule", s.rule}, {"detail", s.detail}});
      j["steps"] = steps;
      j["reduced"] = reduced_json(g.reduced);
      emit(j.dump(2) + "\n");
      return 0;
    }
    std::string header;
    for (const auto& s : g.steps) header += "# " + s.rule + ": " + s.detail + "\n";
    header += "# reduced datum\n";
    std::istringstream arr(g.reduced.arrangement.lines.empty() ? std::string() : print_arrangement(g.reduced.arrangement));
    for (std::string line; std::getline(arr, line);) header += "#   " + line + "\n";
    for (const auto& pt : g.reduced.points) header += "#   point " + to_string(pt) + "\n";
    emit(header + render(p, format_));
    return 0;
  }

  int abelianize() {
    AbelianInvariants inv = abelianization(source());
    if (format_ == Format::Json) {
      nlohmann::ordered_json j;
      j["free_rank"] = inv.free_rank;
      nlohmann::ordered_json t = nlohmann::ordered_json::array();
      for (const auto& d : inv.torsion) t.push_back(d.str());
      j["torsion"] = t;
      j["group"] = inv.to_string();
      if (auto o = inv.order()) j["order"] = o->str();
      emit(j.dump(2) + "\n");
    } else {
      std::string out = inv.to_string() + "\n";
      if (auto o = inv.order()) out += "order " + o->str() + "\n";
      emit(out);
    }
    return 0;
  }

  int check_hom() {
    Presentation p = source();
    std::string spec = job_.images;
    if (!spec.empty() && spec[0] == '@') {
      spec = read_text_file(spec.substr(1));
      std::replace(spec.begin(), spec.end(), '\n', ';');
    }
    std::vector<IntegerMatrix> images;
    for (const auto& token : split(spec, ';')) images.push_back(IntegerMatrix::parse(token));
    HomomorphismCheck check = verify_homomorphism(p, images);
    std::string out;
    if (check.pass) {
      out += "homomorphism ok\n";
    } else {
      const Relation& r = p.relators[*check.failing_relator];
      out += "relator " + std::to_string(*check.failing_relator + 1) + " (" + r.origin + ") " +
             to_string(r.relator, &p.names) + " is not sent to the identity\n";
    }
    if (!job_.infinite_order.empty()) {
      Word w = parse_word(job_.infinite_order, &p.names);
      IntegerMatrix m = evaluate(w, images);
      bool infinite = matrix_infinite_order(m);
      out += "image of " + to_string(w, &p.names) + " = " + m.to_string() + (infinite ? " has infinite order\n" : " has finite order\n");
    }
    emit(out);
    return check.pass ? 0 : kHomFailed;
  }

  int enumerate() {
    Presentation p = maybe_simplify(source());
    std::vector<Word> h;
    for (const auto& token : split(job_.subgroup, ',')) h.push_back(parse_word(token, &p.names));
    CosetResult r = coset_enumeration(p, h, job_.max_cosets);
    std::string out = r.closed ? "index " + std::to_string(r.index) + "\n" : "inconclusive\n";
    out += "cosets defined " + std::to_string(r.defined) + "\n";
    emit(out);
    return 0;
  }

  int plot() {
    std::string svg = render_svg(analysis().arrangement);
    std::ofstream out(job_.out, std::ios::binary);
    if (!out) throw InputError("cannot write '" + job_.out + "'");
    out << svg;
    return 0;
  }

 private:
  const Analysis& analysis() {
    if (!analysis_) {
      if (job_.file.empty()) throw InputError("an arrangement file is required");
      TraceSink sink;
      if (job_.trace) sink = trace_event;
      analysis_ = analyze(read_arrangement_file(job_.file), sink);
    }
    return *analysis_;
  }

  Presentation source() {
    if (!job_.presentation_file.empty()) {
      std::string text;
      if (job_.presentation_file == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
      } else {
        text = read_text_file(job_.presentation_file);
      }
      return parse_presentation(text);
    }
    return analysis().complement();
  }

  Presentation maybe_simplify(const Presentation& p) {
    if (!job_.simplify) return p;
    TietzeLog log;
    Presentation out = tietze_simplify(p, job_.budget.value_or(default_budget(p)), &log);
    if (job_.trace)
      for (const auto& s : log.steps) std::cerr << "tietze: " << s << "\n";
    if (log.exhausted) std::cerr << "warning: simplification budget exhausted\n";
    return out;
  }

  static nlohmann::ordered_json reduced_json(const LacDatum& d) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json lines = nlohmann::ordered_json::array();
    for (const auto& l : d.arrangement.lines)
      lines.push_back({to_string(l.coeffs[0]), to_string(l.coeffs[1]), to_string(l.coeffs[2])});
    j["lines"] = lines;
    if (!d.arrangement.lines.empty()) j["infinity"] = d.arrangement.infinity_index + 1;
    nlohmann::ordered_json pts = nlohmann::ordered_json::array();
    for (const auto& p : d.points) pts.push_back(to_string(p));
    j["points"] = pts;
    return j;
  }

  void emit(const std::string& text) { std::cout << text; }

  const Job& job_;
  Format format_;
  std::optional<Analysis> analysis_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fundamental groups of real line arrangement complements"};
  app.require_subcommand(1);
  app.fallthrough();
  Job job;
  app.add_option("--format", job.format, "Output format: text, json or gap")
      ->check(CLI::IsMember({"text", "json", "gap"}));
  app.add_flag("--trace", job.trace, "Print sweep events and Tietze moves to stderr as they happen");
  app.add_option("--budget", job.budget, "Tietze step budget (default 2000 + 50 L^2)");

  auto arrangement = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("file", job.file, "Arrangement file");
    if (required) opt->required()->check(CLI::ExistingFile);
  };
  auto simplify = [&](CLI::App* sub) {
    sub->add_flag("--simplify", job.simplify, "Apply Tietze simplification within the budget");
  };
  auto group_source = [&](CLI::App* sub) {
    arrangement(sub, false);
    sub->add_option("--presentation", job.presentation_file,
                    "Presentation file in text or JSON form, - for stdin");
  };

  auto* present = app.add_subcommand("present", "Complement presentation");
  arrangement(present, true);
  simplify(present);

  auto* meridians = app.add_subcommand("meridians", "Meridians of all lines and singular points");
  arrangement(meridians, true);

  auto* orbifold = app.add_subcommand("orbifold", "Weighted orbifold presentation");
  arrangement(orbifold, true);
  orbifold->add_option("--weights", job.weights, "Weights for L1..Ln, L_inf, p1..ps (positive, inf or a symbol)")
      ->required();
  simplify(orbifold);

  auto* lac = app.add_subcommand("lac", "Reduce a LAC datum and present its group");
  arrangement(lac, true);
  lac->add_option("--points", job.points, "Points to blow up: p<label> or a:b:c, comma separated");
  lac->add_option("--index", job.index, "Kept divisors: 'points' (default), 'all', or L<i>/S<j>/numbers");
  simplify(lac);

  auto* abelianize = app.add_subcommand("abelianize", "Abelianization invariants");
  group_source(abelianize);

  auto* check = app.add_subcommand("check-hom", "Check integer matrix images of the generators");
  group_source(check);
  check->add_option("--images", job.images, "Matrices [[a,b],[c,d]] separated by ';', or @file")->required();
  check->add_option("--infinite-order", job.infinite_order, "Word whose image is tested for infinite order");

  auto* enumerate = app.add_subcommand("enumerate", "Todd-Coxeter coset enumeration");
  group_source(enumerate);
  enumerate->add_option("--max", job.max_cosets, "Cap on defined cosets")->check(CLI::PositiveNumber);
  enumerate->add_option("--subgroup", job.subgroup, "Subgroup generators, comma separated");
  simplify(enumerate);

  auto* plot = app.add_subcommand("plot", "Draw the affine picture as SVG");
  arrangement(plot, true);
  plot->add_option("--out", job.out, "Output SVG file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  for (auto* sub : {abelianize, check, enumerate})
    if (sub->parsed() && job.file.empty() && job.presentation_file.empty()) {
      std::cerr << sub->get_name() << ": give an arrangement file or --presentation\n";
      return 1;
    }

  try {
    Runner run(job);
    if (present->parsed()) return run.present();
    if (meridians->parsed()) return run.meridians();
    if (orbifold->parsed()) return run.orbifold();
    if (lac->parsed()) return run.lac();
    if (abelianize->parsed()) return run.abelianize();
    if (check->parsed()) return run.check_hom();
    if (enumerate->parsed()) return run.enumerate();
    if (plot->parsed()) return run.plot();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  }
  return 1;
}
