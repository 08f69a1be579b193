#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "latknot/latknot.hpp"

namespace latknot::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A knot was required but the word is not one.
class Rejected : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "plain";
  bool structured() const { return format == "structured"; }

  std::vector<std::string> words;
  std::string word;
  std::string word2;
  std::string axis = "z";
  std::string cert_path;
  std::string output;
  std::int64_t shift = 0;
  std::int64_t layer = 0;
  std::int64_t delta = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  std::string letter;
  std::size_t max_len = 0;
  std::size_t max_states = 0;
  std::size_t max_depth = 0;
  unsigned threads = 1;
};

// "@path" reads the first word of a corpus file; anything else is the word itself.
Word load_word(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw UsageError("cannot open word file " + arg.substr(1));
    auto corpus = parse_corpus(in);
    if (corpus.empty()) throw UsageError("word file " + arg.substr(1) + " has no words");
    return corpus.front();
  }
  return parse_word(arg);
}

std::vector<Word> load_words(const std::vector<std::string>& args) {
  std::vector<Word> out;
  for (const auto& a : args) {
    if (!a.empty() && a.front() == '@') {
      std::ifstream in(a.substr(1));
      if (!in) throw UsageError("cannot open word file " + a.substr(1));
      for (auto& w : parse_corpus(in)) out.push_back(std::move(w));
    } else {
      out.push_back(parse_word(a));
    }
  }
  return out;
}

KnotWord load_knot(const std::string& arg) {
  const Word w = load_word(arg);
  auto v = validate_knot(w);
  if (auto* r = std::get_if<KnotRejection>(&v)) {
    throw Rejected(format_word(w) + " is not a lattice knot: " + r->describe());
  }
  return std::get<KnotWord>(v);
}

Axis to_axis(const std::string& text) {
  const auto a = parse_axis(text);
  if (!a) throw UsageError("axis must be one of x, y, z");
  return *a;
}

json vec_json(const IntVec3& v) { return json::array({v.x, v.y, v.z}); }

json move_json(const SwitchMove& m) {
  return json{{"i", m.start}, {"j", m.end}, {"c", std::string(1, m.conjugator.to_char())}};
}

std::string move_plain(const SwitchMove& m) {
  std::ostringstream os;
  os << m.start << ' ' << m.end << ' ' << m.conjugator.to_char();
  return os.str();
}

json rejection_json(const KnotRejection& r) {
  json j{{"reason", kind_name(r.kind)}};
  if (r.kind == KnotRejection::Kind::NotClosed) j["ab"] = vec_json(r.displacement);
  if (r.kind == KnotRejection::Kind::SelfIntersects) j["subword"] = json::array({r.first, r.last});
  return j;
}

// Writes to the -o file when given, otherwise to stdout.
template <typename Fn>
void emit(const std::string& path, std::ostream& out, Fn&& write) {
  if (path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write " + path);
  write(file);
}

int cmd_validate(const Options& o, std::ostream& out) {
  int code = kExitOk;
  json all = json::array();
  for (const auto& w : load_words(o.words)) {
    const auto v = validate_knot(w);
    const auto* r = std::get_if<KnotRejection>(&v);
    if (r) code = kExitRejected;
    if (o.structured()) {
      json j{{"word", format_word(w)}, {"valid", r == nullptr}, {"length", w.size()}};
      if (r) j.update(rejection_json(*r));
      all.push_back(j);
    } else if (r) {
      out << "rejected: " << kind_name(r->kind) << '\n';
      out << "  " << r->describe() << '\n';
    } else {
      out << "valid knot, length " << w.size() << '\n';
    }
  }
  if (o.structured()) out << (all.size() == 1 ? all[0] : all).dump() << '\n';
  return code;
}

int cmd_ab(const Options& o, std::ostream& out) {
  const Word w = load_word(o.word);
  const IntVec3 ab = abelianization(w);
  if (o.structured()) {
    out << json{{"word", format_word(w)}, {"ab", vec_json(ab)}}.dump() << '\n';
  } else {
    out << ab << '\n';
  }
  return kExitOk;
}

int cmd_canon(const Options& o, std::ostream& out) {
  const Word w = load_word(o.word);
  if (w.empty()) throw Rejected("the empty word has no rotations");
  const Word c = canonical_rotation(w);
  if (o.structured()) {
    out << json{{"word", format_word(w)}, {"canonical", format_word(c)},
                {"offset", canonical_offset(w)}}
               .dump()
        << '\n';
  } else {
    out << c << '\n';
  }
  return kExitOk;
}

int cmd_rotate(const Options& o, std::ostream& out, std::ostream& err) {
  const Word w = load_word(o.word);
  const bool seam = has_cancellable_seam(w);
  const Word r = rotate(w, o.shift);
  if (seam && r.size() != w.size()) {
    err << "note: rotation reduced the seam (" << w.size() - r.size() << " letters cancelled)\n";
  }
  if (o.structured()) {
    out << json{{"word", format_word(w)}, {"k", o.shift}, {"rotated", format_word(r)},
                {"seam_reduced", r.size() != w.size()}}
               .dump()
        << '\n';
  } else {
    out << r << '\n';
  }
  return kExitOk;
}

int cmd_layers(const Options& o, std::ostream& out, std::ostream& err) {
  const Word w = load_word(o.word);
  const Axis axis = to_axis(o.axis);
  if (auto r = check_knot(w.letters())) err << "note: word is not a lattice knot: " << r->describe() << '\n';
  const LayerMap map = extract_layers(w, axis);
  if (o.structured()) {
    json layers = json::array();
    for (auto it = map.all().rbegin(); it != map.all().rend(); ++it) {
      json runs = json::array();
      for (const auto& r : it->second) runs.push_back(json::array({r.first, r.last}));
      layers.push_back(json{{"layer", it->first}, {"runs", runs}});
    }
    out << json{{"word", format_word(w)}, {"axis", std::string(1, axis_name(axis))},
                {"layers", layers}}
               .dump()
        << '\n';
    return kExitOk;
  }
  for (auto it = map.all().rbegin(); it != map.all().rend(); ++it) {
    out << "layer " << it->first << ':';
    bool first = true;
    for (const auto& r : it->second) {
      out << (first ? " " : ",") << '[' << r.first << ".." << r.last << ']';
      first = false;
    }
    out << '\n';
  }
  return kExitOk;
}

int cmd_switch(const Options& o, std::ostream& out) {
  const KnotWord k = load_knot(o.word);
  const auto letter = o.letter.size() == 1 ? Letter::from_char(o.letter[0]) : std::nullopt;
  if (!letter) throw UsageError("conjugator must be one of x y z X Y Z");
  const SwitchMove m{o.i, o.j, *letter};
  const SwitchCheck check = check_switch(k, m);
  if (!check) {
    if (o.structured()) {
      out << json{{"word", format_word(k.word())}, {"move", move_json(m)}, {"applicable", false},
                  {"reason", failure_name(*check.failure)}}
                 .dump()
          << '\n';
    } else {
      out << "rejected: " << failure_name(*check.failure) << '\n';
      out << "  " << check.describe() << '\n';
    }
    return kExitRejected;
  }
  const KnotWord r = apply_switch(k, m);
  if (o.structured()) {
    out << json{{"word", format_word(k.word())}, {"move", move_json(m)}, {"applicable", true},
                {"result", format_word(r.word())}}
               .dump()
        << '\n';
  } else {
    out << r.word() << '\n';
  }
  return kExitOk;
}

int cmd_moves(const Options& o, std::ostream& out) {
  const KnotWord k = load_knot(o.word);
  if (o.max_len < k.size()) throw UsageError("--max-len must be at least the word length");
  const auto outcomes = enumerate_switch_outcomes(k, o.max_len);
  if (o.structured()) {
    json list = json::array();
    for (const auto& oc : outcomes) {
      json j = move_json(oc.move);
      j["result"] = format_word(oc.result.word());
      list.push_back(j);
    }
    out << json{{"word", format_word(k.word())}, {"max_len", o.max_len}, {"count", outcomes.size()},
                {"moves", list}}
               .dump()
        << '\n';
  } else {
    for (const auto& oc : outcomes) out << move_plain(oc.move) << ' ' << oc.result.word() << '\n';
    out << outcomes.size() << " applicable switches\n";
  }
  return kExitOk;
}

int cmd_elevate(const Options& o, std::ostream& out) {
  const KnotWord k = load_knot(o.word);
  const Axis axis = to_axis(o.axis);
  Elevation e = [&] {
    try {
      return elevate_layer(k, axis, o.layer, o.delta);
    } catch (const ElevationError& ex) {
      throw Rejected(ex.what());
    }
  }();
  if (o.structured()) {
    json moves = json::array();
    for (const auto& m : e.moves) moves.push_back(move_json(m));
    out << json{{"word", format_word(k.word())}, {"axis", std::string(1, axis_name(axis))},
                {"layer", o.layer}, {"delta", o.delta}, {"result", format_word(e.knot.word())},
                {"moves", moves}}
               .dump()
        << '\n';
  } else {
    out << e.knot.word() << '\n';
    for (const auto& m : e.moves) out << "  switch " << move_plain(m) << '\n';
  }
  return kExitOk;
}

int cmd_double(const Options& o, std::ostream& out) {
  const Word w = load_word(o.word);
  const Word d = double_direct(w, to_axis(o.axis));
  if (o.structured()) {
    out << json{{"word", format_word(w)}, {"axis", o.axis}, {"doubled", format_word(d)},
                {"length", d.size()}}
               .dump()
        << '\n';
  } else {
    out << d << '\n';
  }
  return kExitOk;
}

int cmd_compile_double(const Options& o, std::ostream& out) {
  const KnotWord k = load_knot(o.word);
  const Axis axis = to_axis(o.axis);
  const Certificate cert = [&] {
    try {
      return compile_doubling(k, axis);
    } catch (const ElevationError& ex) {
      throw Rejected(ex.what());
    }
  }();
  if (o.output.empty()) {
    write_certificate(out, cert);
    return kExitOk;
  }
  emit(o.output, out, [&](std::ostream& f) { write_certificate(f, cert); });
  if (o.structured()) {
    out << json{{"word", format_word(k.word())}, {"axis", std::string(1, axis_name(axis))},
                {"switches", cert.switch_count()}, {"end", format_word(cert.end_word)},
                {"certificate", o.output}}
               .dump()
        << '\n';
  } else {
    out << cert.switch_count() << " switches, ends at " << cert.end_word << '\n';
  }
  return kExitOk;
}

int cmd_connect(const Options& o, std::ostream& out) {
  const KnotWord a = load_knot(o.word);
  const KnotWord b = load_knot(o.word2);
  const SearchBudget budget{o.max_len, o.max_states, o.max_depth};
  SearchOutcome r;
  try {
    r = bfs_connect(a, b, budget, o.threads);
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  }
  if (r.connected() && !o.output.empty()) {
    emit(o.output, out, [&](std::ostream& f) { write_certificate(f, *r.certificate); });
  }
  if (o.structured()) {
    json j{{"status", r.connected() ? "connected" : "unknown_within_budget"},
           {"depth", r.connected() ? json(r.depth) : json(nullptr)},
           {"frontier_depth", r.frontier_depth},
           {"states_explored", r.stats.states_explored},
           {"frontier_sizes", r.stats.frontier_sizes},
           {"peak_memory_bytes", r.stats.peak_memory_bytes}};
    if (r.connected() && o.output.empty()) {
      j["certificate"] = json::parse(certificate_to_string(*r.certificate));
    }
    out << j.dump() << '\n';
  } else {
    if (r.connected()) {
      out << "connected at depth " << r.depth << '\n';
      if (o.output.empty()) write_certificate(out, *r.certificate);
    } else {
      out << "unknown within budget (searched to depth " << r.frontier_depth << ")\n";
    }
    write_stats(out, r.stats);
  }
  return r.connected() ? kExitOk : kExitRejected;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const KnotWord a = load_knot(o.word);
  const KnotWord b = load_knot(o.word2);
  std::ifstream in(o.cert_path);
  if (!in) throw UsageError("cannot open certificate " + o.cert_path);
  Certificate cert;
  try {
    cert = read_certificate(in);
  } catch (const CertificateFormatError& ex) {
    throw UsageError(ex.what());
  }
  const VerificationReport rep = verify_certificate(a, cert, b);
  if (o.structured()) {
    json steps = json::array();
    for (const auto& s : rep.steps) {
      steps.push_back(json{{"index", s.index}, {"step", s.step}, {"length", s.length}, {"valid", s.valid}});
    }
    json j{{"accepted", rep.accepted}, {"message", rep.message}, {"steps", steps}};
    out << j.dump() << '\n';
  } else {
    for (const auto& s : rep.steps) {
      out << "  step " << s.index << ": " << s.step << " -> "
          << (s.valid ? "length " + std::to_string(s.length) : std::string("invalid")) << '\n';
    }
    out << (rep.accepted ? "accepted" : "rejected: " + rep.message) << '\n';
  }
  return rep.accepted ? kExitOk : kExitRejected;
}

int cmd_export(const Options& o, std::ostream& out) {
  const Word w = load_word(o.word);
  const LatticePath path = embed(w);
  emit(o.output, out, [&](std::ostream& f) { write_polyline(f, path); });
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lattice knot words: validation, switches, elevation, doubling, search", "latknot"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"plain", "structured"}))
      ->capture_default_str();

  auto word_arg = [&o](CLI::App* sub, const char* name = "word") {
    sub->add_option(name, o.word, "Word (letters xyzXYZ, uppercase = inverse) or @file")->required();
  };
  auto axis_opt = [&o](CLI::App* sub) {
    sub->add_option("--axis", o.axis, "Axis x, y or z")->required()->check(CLI::IsMember({"x", "y", "z"}));
  };

  auto* validate = app.add_subcommand("validate", "Check the lattice knot conditions");
  validate->add_option("words", o.words, "Words or @corpus files")->required();

  auto* ab = app.add_subcommand("ab", "Abelianization (endpoint displacement)");
  word_arg(ab);

  auto* canon = app.add_subcommand("canon", "Least cyclic rotation");
  word_arg(canon);

  auto* rot = app.add_subcommand("rotate", "Cyclic rotation by k letters");
  word_arg(rot);
  rot->add_option("k", o.shift, "Rotation amount")->required();

  auto* layers = app.add_subcommand("layers", "Layer runs along an axis");
  axis_opt(layers);
  word_arg(layers);

  auto* sw = app.add_subcommand("switch", "Apply one elementary switch (i, j, c)");
  word_arg(sw);
  sw->add_option("i", o.i, "First index of v (1-based)")->required();
  sw->add_option("j", o.j, "Last index of v")->required();
  sw->add_option("c", o.letter, "Conjugating letter")->required();

  auto* mv = app.add_subcommand("moves", "Enumerate applicable switches");
  word_arg(mv);
  mv->add_option("--max-len", o.max_len, "Maximum result length")->required();

  auto* elev = app.add_subcommand("elevate", "Elevate (delta > 0) or lower a layer");
  axis_opt(elev);
  elev->add_option("--layer", o.layer, "Layer index")->required();
  elev->add_option("--delta", o.delta, "Signed number of layers to move")->required();
  word_arg(elev);

  auto* dbl = app.add_subcommand("double", "Direct doubling along an axis");
  axis_opt(dbl);
  word_arg(dbl);

  auto* cdbl = app.add_subcommand("compile-double", "Certificate realizing doubling by switches");
  axis_opt(cdbl);
  word_arg(cdbl);
  cdbl->add_option("-o,--output", o.output, "Certificate file (default: stdout)");

  auto* conn = app.add_subcommand("connect", "Bounded BFS for a switch certificate");
  word_arg(conn, "word1");
  conn->add_option("word2", o.word2, "Target word")->required();
  conn->add_option("--max-len", o.max_len, "Maximum word length")->required();
  conn->add_option("--max-states", o.max_states, "Maximum states")->required();
  conn->add_option("--max-depth", o.max_depth, "Maximum switch depth")->required();
  conn->add_option("--threads", o.threads, "Frontier expansion threads")->capture_default_str();
  conn->add_option("-o,--output", o.output, "Certificate file");

  auto* ver = app.add_subcommand("verify", "Replay and check a certificate");
  word_arg(ver, "word1");
  ver->add_option("cert", o.cert_path, "Certificate file")->required();
  ver->add_option("word2", o.word2, "Expected end word")->required();

  auto* exp = app.add_subcommand("export-geometry", "Write the lattice path as a polyline");
  word_arg(exp);
  exp->add_option("-o,--output", o.output, "Polyline file (default: stdout)");

  // CLI11 2.4 reads "-3" as a short flag; numeric arguments are marked positional.
  std::vector<std::string> argv;
  for (const auto& a : args) {
    const bool negative_number =
        a.size() > 1 && a[0] == '-' && std::all_of(a.begin() + 1, a.end(), ::isdigit);
    if (negative_number && !argv.empty() && argv.back().rfind("--", 0) != 0) {
      argv.push_back("--");
    }
    argv.push_back(a);
  }
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*validate) return cmd_validate(o, out);
    if (*ab) return cmd_ab(o, out);
    if (*canon) return cmd_canon(o, out);
    if (*rot) return cmd_rotate(o, out, err);
    if (*layers) return cmd_layers(o, out, err);
    if (*sw) return cmd_switch(o, out);
    if (*mv) return cmd_moves(o, out);
    if (*elev) return cmd_elevate(o, out);
    if (*dbl) return cmd_double(o, out);
    if (*cdbl) return cmd_compile_double(o, out);
    if (*conn) return cmd_connect(o, out);
    if (*ver) return cmd_verify(o, out);
    if (*exp) return cmd_export(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Rejected& e) {
    if (o.structured()) {
      out << json{{"rejected", e.what()}}.dump() << '\n';
    } else {
      out << "rejected: " << e.what() << '\n';
    }
    return kExitRejected;
  }
  return kExitUsage;
}

}  // namespace latknot::cli
