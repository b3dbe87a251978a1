#include "strathom/cli.hpp"

#include "CLI11.hpp"
#include "strathom/errors.hpp"
#include "strathom/io.hpp"
#include "strathom/modes.hpp"
#include "strathom/signatures.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace strathom::cli {

namespace {

using io::Json;
using stratified::TwoStrataSpace;

struct Options {
  std::string input;
  std::string p, q, k, degree, degrees, p_range, q_range;
  std::string theorem;
  std::string target = "ct";
  std::string pairing;
  int subdivide = 1;
  int torus_dim = 2;
  int cutoff = 50;
  bool json = false;
};

struct Report {
  Json result = Json::object();
  std::ostringstream text;
  bool ok = true;
};

struct Input {
  std::string path;
  std::string hash;
};

class Command {
 public:
  explicit Command(const Options& o) : o_(o) {}

  Json load(const std::string& path) {
    const std::string bytes = io::read_file(path);
    inputs_.push_back({path, io::hex64(io::fnv1a64(bytes))});
    return io::parse_json(bytes, path);
  }

  TwoStrataSpace space() {
    return io::parse_space(load(o_.input), std::filesystem::path(o_.input).parent_path());
  }

  std::filesystem::path base() const { return std::filesystem::path(o_.input).parent_path(); }

  const std::vector<Input>& inputs() const { return inputs_; }

 private:
  const Options& o_;
  std::vector<Input> inputs_;
};

std::vector<int> span(std::pair<int, int> r) {
  std::vector<int> out;
  for (int x = r.first; x <= r.second; ++x) out.push_back(x);
  return out;
}

// Values from the range flag if set, else the single flag (which may itself
// be a range), else the fallback.
std::vector<int> values(const std::string& range, const std::string& range_name,
                        const std::string& single, const std::string& single_name,
                        std::optional<std::pair<int, int>> fallback) {
  if (!range.empty()) return span(parse_range(range, range_name));
  if (!single.empty()) return span(parse_range(single, single_name));
  if (!fallback) throw InputError("option '" + single_name + "' is required");
  return span(*fallback);
}

std::string row(const std::vector<std::size_t>& dims) {
  std::ostringstream s;
  s << "(";
  for (std::size_t i = 0; i < dims.size(); ++i) s << (i ? "," : "") << dims[i];
  s << ")";
  return s.str();
}

std::string cell(const std::string& s, std::size_t width) {
  // Pads by code points so the arrow symbols line up.
  std::size_t cps = 0;
  for (unsigned char c : s) cps += (c & 0xC0) != 0x80;
  return std::string(width > cps ? width - cps : 0, ' ') + s;
}

void verb_homology(Command& cmd, const Options& o, Report& r) {
  io::SimplicialInput in = io::parse_simplicial(cmd.load(o.input));
  const auto h = chains::homology(simplicial::chain_complex_of(in.complex));
  const int top = std::max(in.complex.dimension(), 0);
  r.result["dimension"] = in.complex.dimension();
  r.result["betti"] = io::dims_to_json(h, 0, top);
  r.text << "H_*: " << row(h.to_vector(0, top)) << "\n";
}

void verb_ih(Command& cmd, const Options& o, Report& r) {
  const TwoStrataSpace x = cmd.space();
  if (o.target != "ct" && o.target != "x") {
    throw InputError("option '--target': expected ct or x, got '" + o.target + "'");
  }
  const bool ct = o.target == "ct";
  const int c = ct ? x.n - x.l : x.l + 1;
  std::vector<int> qs = ct ? values(o.q_range, "--q-range", o.q.empty() ? o.p : o.q, "--q",
                                    std::pair{-1, c - 1})
                           : values(o.p_range, "--p-range", o.p.empty() ? o.q : o.p, "--p",
                                    std::pair{-1, c - 1});
  r.result["target"] = ct ? "CT(X)" : "X";
  r.result["codim"] = c;
  Json rows = Json::array();
  r.text << "IH of " << (ct ? "CT(X)" : "X") << ", singular codimension " << c << "\n";
  for (int q : qs) {
    const auto dims = ct ? stratified::ih_ct_dims(x, q) : stratified::ih_x_dims(x, q);
    rows.push_back({{"perversity", q}, {"dims", io::dims_to_json(dims, 0, x.n)}});
    r.text << "  perversity " << std::setw(3) << q << ": " << row(dims.to_vector(0, x.n)) << "\n";
  }
  r.result["rows"] = std::move(rows);
}

void verb_hi(Command& cmd, const Options& o, Report& r) {
  const TwoStrataSpace x = cmd.space();
  const auto ps = values(o.p_range, "--p-range", o.p, "--p", std::pair{-1, x.l});
  Json rows = Json::array();
  r.text << "reduced HI of X, link dimension " << x.l << "\n";
  for (int p : ps) {
    const auto dims = stratified::hi_dims(x, {p, x.l + 1});
    rows.push_back({{"p", p}, {"k", x.l - p}, {"dims", io::dims_to_json(dims, 0, x.n)}});
    r.text << "  p = " << std::setw(3) << p << ": " << row(dims.to_vector(0, x.n)) << "\n";
  }
  r.result["rows"] = std::move(rows);
}

void verb_ig(Command& cmd, const Options& o, Report& r) {
  const TwoStrataSpace x = cmd.space();
  const auto ks = values("", "", o.k, "--k", std::nullopt);
  const auto js = values(o.degrees, "--degrees", o.degree, "--degree", std::pair{0, x.n});
  Json rows = Json::array();
  for (int k : ks) {
    for (int j : js) {
      const std::size_t d = stratified::ig_dims(x, {k, j});
      rows.push_back({{"k", k}, {"j", j}, {"dim", d}});
      r.text << "IG^(" << k << ")_" << j << "(CT(X)) = " << d << "\n";
    }
  }
  r.result["rows"] = std::move(rows);
}

void verb_table(Command& cmd, const Options& o, Report& r) {
  const TwoStrataSpace x = cmd.space();
  const int c = x.n - x.l;
  const auto qs = values(o.q_range, "--q-range", o.q, "--q", std::pair{-1, c - 1});
  const stratified::IHTable t = stratified::ih_table(x, qs.front(), qs.back());
  Json rows = Json::array();
  r.text << "IH^q_j(CT(X)), q at codimension " << c << "\n";
  r.text << cell("j \\ q", 6);
  for (int q : qs) r.text << cell(std::to_string(q), q == qs.front() ? 5 : 8);
  r.text << "\n";
  for (int j = 0; j <= t.j_hi; ++j) {
    const auto& dims = t.dims[static_cast<std::size_t>(j)];
    const auto& kinds = t.annotations[static_cast<std::size_t>(j)];
    Json maps = Json::array();
    r.text << cell(std::to_string(j), 6) << cell(std::to_string(dims[0]), 5);
    for (std::size_t i = 0; i < kinds.size(); ++i) {
      const std::string sym = stratified::symbol(kinds[i]);
      maps.push_back({{"from", qs[i]},
                      {"rank", t.ranks[static_cast<std::size_t>(j)][i]},
                      {"kind", sym}});
      r.text << cell(sym, 4) << cell(std::to_string(dims[i + 1]), 4);
    }
    r.text << "\n";
    rows.push_back({{"j", j}, {"dims", dims}, {"maps", std::move(maps)}});
  }
  r.result["q"] = qs;
  r.result["rows"] = std::move(rows);
}

void report_verdicts(const std::vector<stratified::Verdict>& vs, Report& r) {
  Json out = Json::array();
  for (const auto& v : vs) {
    out.push_back({{"check", v.check}, {"degree", v.degree}, {"lhs", v.lhs}, {"rhs", v.rhs},
                   {"pass", v.pass}});
    r.text << (v.pass ? "PASS " : "FAIL ") << v.check << ": " << v.lhs << " vs " << v.rhs << "\n";
    r.ok = r.ok && v.pass;
  }
  r.result["verdicts"].insert(r.result["verdicts"].end(), out.begin(), out.end());
}

void report_signature(const signatures::SignatureReport& s, Report& r) {
  r.result["signature"] = {{"sigma_Mbar", s.sigma_Mbar},
                           {"sigma_perverse_CT", s.sigma_perverse_CT},
                           {"sigma_IH_X", s.sigma_IH_X},
                           {"sigma_HI_X", s.sigma_HI_X},
                           {"sigma_Z", s.sigma_Z},
                           {"all_equal", s.all_equal},
                           {"trivially_zero", s.trivially_zero},
                           {"hi_middle", s.hi_middle},
                           {"ih_x_middle", s.ih_x_middle},
                           {"ih_z_middle", s.ih_z_middle},
                           {"gamma_image", s.gamma_image},
                           {"pairing_rank", s.pairing_rank},
                           {"rank_consistent", s.rank_consistent}};
  r.text << "sigma(M-bar) = " << s.sigma_Mbar << ", perverse sigma(CT X) = " << s.sigma_perverse_CT
         << ", sigma_IH(X) = " << s.sigma_IH_X << ", sigma_HI(X) = " << s.sigma_HI_X
         << ", sigma(Z) = " << s.sigma_Z << (s.trivially_zero ? " (n = 2 mod 4)" : "") << "\n";
  r.text << "middle dims: HI(X) " << s.hi_middle << ", IH(X) " << s.ih_x_middle << ", IH(Z) "
         << s.ih_z_middle << ", image on CT(X) " << s.gamma_image << ", pairing rank "
         << s.pairing_rank << "\n";
  r.text << (s.all_equal ? "PASS" : "FAIL") << " signatures agree\n";
  r.text << (s.rank_consistent ? "PASS" : "FAIL") << " pairing rank equals middle image\n";
  r.ok = r.ok && s.all_equal && s.rank_consistent;
}

simplicial::PairingData load_pairing(Command& cmd, const std::string& path,
                                     std::optional<std::size_t> degree) {
  if (path.empty()) throw InputError("option '--pairing' is required");
  return io::parse_pairing(cmd.load(path), std::filesystem::path(path).parent_path(), degree);
}

void verb_verify(Command& cmd, const Options& o, Report& r) {
  const TwoStrataSpace x = cmd.space();
  r.result["theorem"] = o.theorem;
  r.result["verdicts"] = Json::array();
  if (o.theorem == "signature") {
    report_signature(signatures::verify_theorem_sig(x, load_pairing(cmd, o.pairing, std::nullopt)), r);
    return;
  }
  const auto ps = values(o.p_range, "--p-range", o.p, "--p", std::nullopt);
  const auto js = values(o.degrees, "--degrees", o.degree, "--degree", std::pair{0, x.n});
  for (int p : ps) {
    const stratified::Perversity pv{p, x.l + 1};
    if (o.theorem == "hom") {
      report_verdicts(stratified::verify_theorem_hom(x, pv, js.front(), js.back()), r);
    } else if (o.theorem == "coh") {
      report_verdicts(stratified::verify_theorem_coh(x, pv, js.front(), js.back()), r);
    } else if (o.theorem == "duality") {
      report_verdicts(stratified::verify_duality(x, pv), r);
    } else {
      throw InputError("option '--theorem': expected hom, coh, duality or signature");
    }
  }
}

void verb_ih_direct(Command& cmd, const Options& o, Report& r) {
  io::SimplicialInput in = io::parse_simplicial(cmd.load(o.input));
  if (o.subdivide < 0) throw InputError("option '--subdivide': must be non-negative");
  simplicial::StratifiedComplex s = io::to_stratified(in);
  for (int i = 0; i < o.subdivide; ++i) s = simplicial::barycentric_subdivide(s);
  const auto ps = values(o.p_range, "--p-range", o.p, "--p", std::pair{-1, s.codim - 1});
  const int top = s.complex.dimension();
  r.result["codim"] = s.codim;
  r.result["subdivisions"] = o.subdivide;
  Json rows = Json::array();
  r.text << "simplicial IH, codimension " << s.codim << ", " << o.subdivide << " subdivision(s)\n";
  for (int p : ps) {
    const auto dims = simplicial::ih_direct(s, p);
    rows.push_back({{"p", p}, {"dims", io::dims_to_json(dims, 0, top)}});
    r.text << "  p = " << std::setw(3) << p << ": " << row(dims.to_vector(0, top)) << "\n";
  }
  r.result["rows"] = std::move(rows);
}

void verb_signature(Command& cmd, const Options& o, Report& r) {
  std::optional<std::size_t> degree;
  if (!o.degree.empty()) degree = static_cast<std::size_t>(parse_range(o.degree, "--degree").first);
  const Json j = cmd.load(o.input);
  if (j.is_object() && j.contains("kind")) {
    const TwoStrataSpace x = io::parse_space(j, cmd.base());
    const auto w = signatures::witt_check(x);
    r.result["witt"] = {{"is_witt", w.is_witt}, {"reason", signatures::to_string(w.reason)}};
    r.text << "Witt: " << (w.is_witt ? "yes" : "no") << " (" << signatures::to_string(w.reason)
           << ")\n";
    if (!w.is_witt || o.pairing.empty()) return;
    report_signature(signatures::verify_theorem_sig(x, load_pairing(cmd, o.pairing, degree)), r);
    return;
  }
  const simplicial::PairingData p = io::parse_pairing(j, cmd.base(), degree);
  const auto inertia = qlinalg::signature_sym(p.matrix);
  r.result["degree"] = p.degree;
  r.result["matrix"] = io::matrix_to_json(p.matrix);
  r.result["inertia"] = {{"pos", inertia.pos}, {"neg", inertia.neg}, {"null", inertia.null}};
  r.result["novikov_signature"] = signatures::novikov_signature(p);
  r.text << p.basis_note << "\n";
  r.text << "inertia (+" << inertia.pos << ", -" << inertia.neg << ", 0:" << inertia.null
         << "), signature " << signatures::novikov_signature(p) << "\n";
}

void verb_hodge(Command& cmd, const Options& o, Report& r) {
  const TwoStrataSpace x = cmd.space();
  const auto ps = values(o.p_range, "--p-range", o.p, "--p", std::nullopt);
  const auto js = values(o.degrees, "--degrees", o.degree, "--degree", std::pair{0, x.n});
  Json rows = Json::array();
  for (int p : ps) {
    for (int j : js) {
      const auto [fs, fc] = stratified::hodge_weights({p, x.l + 1}, x.l, x.n, j);
      rows.push_back({{"p", p}, {"j", j}, {"c_fs", qlinalg::to_string(fs)},
                      {"c_fc", qlinalg::to_string(fc)}});
      r.text << "p = " << p << ", j = " << j << ": c_fs = " << qlinalg::to_string(fs)
             << ", c_fc = " << qlinalg::to_string(fc) << "\n";
    }
  }
  r.result["rows"] = std::move(rows);
}

void verb_modes(const Options& o, Report& r) {
  modes::ModeSpec spec{o.torus_dim, 0, o.cutoff};
  const modes::ModeReport m = modes::mode_report(spec);
  const std::vector<std::size_t> surface(m.surface_dims.begin(), m.surface_dims.end());
  const auto total = m.total_dims.to_vector(0, spec.torus_dim + 2);
  r.result["surface_dims"] = surface;
  r.result["total_dims"] = total;
  Json rejected = Json::array();
  for (const auto& x : m.rejected_modes) {
    rejected.push_back({{"mode", x.mode}, {"degree", x.degree}, {"reason", x.reason}});
  }
  r.result["rejected_modes"] = std::move(rejected);
  r.text << "surface R x S1: " << row(surface) << "\n";
  r.text << "R x S1 x T^" << spec.torus_dim << ": " << row(total) << "\n";
  r.text << m.rejected_modes.size() << " candidate(s) rejected\n";
  for (const auto& x : m.rejected_modes) {
    if (x.mode == 0) r.text << "  degree " << x.degree << ", constant mode: " << x.reason << "\n";
  }
}

void verb_conifold(Command& cmd, Report& r) {
  r.result["space"] = io::space_to_json(stratified::conifold_transition(cmd.space()));
}

}  // namespace

std::pair<int, int> parse_range(const std::string& text, const std::string& option) {
  auto number = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw InputError("option '" + option + "': expected an integer or a..b, got '" + text + "'");
  };
  const auto dots = text.find("..", text.empty() ? 0 : 1);
  if (dots == std::string::npos) {
    const int v = number(text);
    return {v, v};
  }
  const int a = number(text.substr(0, dots));
  const int b = number(text.substr(dots + 2));
  if (b < a) throw InputError("option '" + option + "': empty range '" + text + "'");
  return {a, b};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Intersection homology, intersection spaces and signatures of two-strata spaces",
               "strathom"};
  app.require_subcommand(1);
  Options o;

  struct Verb {
    const char* name;
    const char* help;
    bool file;
  };
  const std::vector<Verb> verbs = {
      {"homology", "Betti numbers of a triangulation", true},
      {"ih", "IH of CT(X) (--target ct) or X (--target x)", true},
      {"hi", "reduced HI of X", true},
      {"ig", "IG groups of CT(X)", true},
      {"table", "IH of CT(X) across perversities with the maps between them", true},
      {"verify", "check a comparison theorem", true},
      {"ih-direct", "IH of a stratified triangulation from allowable chains", true},
      {"signature", "Novikov signature of a pairing or triangulation; Witt check of a space", true},
      {"hodge", "metric weights matching HI", true},
      {"modes", "Fourier-mode count of extended L2 harmonic forms", false},
      {"conifold-transition", "print the conifold transition as an algebraic space", true},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& v : verbs) {
    CLI::App* s = app.add_subcommand(v.name, v.help);
    if (v.file) s->add_option("input", o.input, "input JSON file")->required();
    s->add_flag("--json", o.json, "machine-readable output");
    s->add_option("--p", o.p, "perversity at the link codimension (value or a..b)");
    s->add_option("--q", o.q, "perversity on CT(X) (value or a..b)");
    s->add_option("--k", o.k, "IG superscript (value or a..b)");
    s->add_option("--degree", o.degree, "degree");
    s->add_option("--degrees", o.degrees, "degrees a..b");
    s->add_option("--p-range", o.p_range, "perversities a..b");
    s->add_option("--q-range", o.q_range, "CT perversities a..b");
    s->add_option("--theorem", o.theorem, "hom, coh, duality or signature");
    s->add_option("--target", o.target, "ct or x");
    s->add_option("--pairing", o.pairing, "pairing or triangulation JSON");
    s->add_option("--subdivide", o.subdivide, "barycentric subdivisions before ih-direct");
    s->add_option("--torus-dim", o.torus_dim, "torus dimension for modes");
    s->add_option("--cutoff", o.cutoff, "Fourier cutoff for modes");
    subs[v.name] = s;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return InputFailure;
  }

  std::string verb;
  for (const auto& [name, s] : subs) {
    if (s->parsed()) verb = name;
  }

  Command cmd(o);
  Report r;
  try {
    if (verb == "homology") verb_homology(cmd, o, r);
    else if (verb == "ih") verb_ih(cmd, o, r);
    else if (verb == "hi") verb_hi(cmd, o, r);
    else if (verb == "ig") verb_ig(cmd, o, r);
    else if (verb == "table") verb_table(cmd, o, r);
    else if (verb == "verify") verb_verify(cmd, o, r);
    else if (verb == "ih-direct") verb_ih_direct(cmd, o, r);
    else if (verb == "signature") verb_signature(cmd, o, r);
    else if (verb == "hodge") verb_hodge(cmd, o, r);
    else if (verb == "modes") verb_modes(o, r);
    else if (verb == "conifold-transition") verb_conifold(cmd, r);
  } catch (const InternalError& e) {
    err << "consistency check failed: " << e.what() << "\n";
    return VerdictFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return InputFailure;
  }

  Json provenance;
  provenance["tool"] = "strathom";
  provenance["verb"] = verb;
  Json inputs = Json::array();
  for (const auto& in : cmd.inputs()) inputs.push_back({{"path", in.path}, {"fnv1a64", in.hash}});
  provenance["inputs"] = std::move(inputs);
  Json options = Json::object();
  const std::vector<std::pair<const char*, const std::string*>> given = {
      {"p", &o.p}, {"q", &o.q}, {"k", &o.k}, {"degree", &o.degree}, {"degrees", &o.degrees},
      {"p_range", &o.p_range}, {"q_range", &o.q_range}, {"theorem", &o.theorem},
      {"pairing", &o.pairing}};
  for (const auto& [name, value] : given) {
    if (!value->empty()) options[name] = *value;
  }
  if (verb == "ih") options["target"] = o.target;
  if (verb == "ih-direct") options["subdivide"] = o.subdivide;
  if (verb == "modes") {
    options["torus_dim"] = o.torus_dim;
    options["cutoff"] = o.cutoff;
  }
  provenance["options"] = std::move(options);

  if (o.json) {
    Json doc;
    doc["verb"] = verb;
    doc["ok"] = r.ok;
    doc["result"] = std::move(r.result);
    doc["provenance"] = std::move(provenance);
    out << doc.dump(2) << "\n";
  } else if (verb == "conifold-transition") {
    // Stays loadable as a space file; parse_space ignores the extra key.
    Json space = std::move(r.result["space"]);
    space["provenance"] = std::move(provenance);
    out << space.dump(2) << "\n";
  } else {
    out << r.text.str();
    out << "-- provenance: " << provenance.dump() << "\n";
  }
  return r.ok ? Ok : VerdictFailed;
}

}  // namespace strathom::cli
