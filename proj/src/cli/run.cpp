#include "run.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <type_traits>

#include "json.hpp"

#include "document.hpp"
#include "skew/interpolation.hpp"
#include "skew/validate.hpp"

namespace skew::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr std::size_t kLawSamples = 200;

[[noreturn]] void field_error(int line, const std::string& path, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + path + ": " + msg);
}

const std::map<std::string, std::set<std::string>>& schema() {
  static const std::map<std::string, std::set<std::string>> s = {
      {"", {"format", "task", "side"}},
      {"ring", {"kind", "p", "m", "modulus"}},
      {"twist", {"n", "sigma", "delta", "delta_vector", "delta_values"}},
      {"problem", {"points", "chains", "targets", "polynomial", "point", "word", "order", "t"}},
  };
  return s;
}

void check_schema(const Document& doc) {
  for (const auto& [name, section] : doc.sections) {
    auto it = schema().find(name);
    if (it == schema().end()) field_error(section.line, name, "unknown section");
    for (const auto& [key, value] : section.entries) {
      if (!it->second.count(key)) field_error(value.line, name.empty() ? key : name + "." + key, "unknown key");
    }
  }
}

// A value together with its location, for error messages.
struct Field {
  const Value* value;
  std::string path;

  int line() const { return value->line; }

  const Value& expect(Value::Kind kind) const {
    if (value->kind != kind) {
      field_error(line(), path, std::string("expected ") + kind_name(kind) + ", got " + kind_name(value->kind));
    }
    return *value;
  }
  const std::string& str() const { return expect(Value::Kind::string).text; }
  long long integer() const { return expect(Value::Kind::integer).number; }
  std::size_t size() const { return expect(Value::Kind::array).items.size(); }
  // Element k, with a 1-based index in the path.
  Field operator[](std::size_t k) const {
    return {&expect(Value::Kind::array).items[k], path + "[" + std::to_string(k + 1) + "]"};
  }
};

class Reader {
 public:
  explicit Reader(const Document& doc) : doc_(doc) {}

  std::optional<Field> get(const std::string& section, const std::string& key) const {
    auto s = doc_.sections.find(section);
    if (s == doc_.sections.end()) return std::nullopt;
    auto e = s->second.entries.find(key);
    if (e == s->second.entries.end()) return std::nullopt;
    return Field{&e->second, path(section, key)};
  }

  Field require(const std::string& section, const std::string& key) const {
    if (auto f = get(section, key)) return *f;
    field_error(section_line(section), path(section, key), "missing required key");
  }

  int section_line(const std::string& section) const {
    auto s = doc_.sections.find(section);
    return s == doc_.sections.end() ? 1 : s->second.line;
  }

 private:
  static std::string path(const std::string& section, const std::string& key) {
    return section.empty() ? key : section + "." + key;
  }

  const Document& doc_;
};

std::size_t parse_count(const Field& f, long long lo, long long hi) {
  const long long v = f.integer();
  if (v < lo || v > hi) {
    field_error(f.line(), f.path, "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return static_cast<std::size_t>(v);
}

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

// "o" or "1" is the empty word; otherwise factors such as x1^2*x2, or x^3
// when there is one variable.
Monomial parse_word(const Field& f, std::size_t n) {
  const std::string s = strip_spaces(f.str());
  if (s == "o" || s == "1") return {};
  auto bad = [&](const std::string& why) -> void { field_error(f.line(), f.path, "bad word '" + s + "': " + why); };
  std::vector<std::uint16_t> letters;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t end = s.find('*', pos);
    if (end == std::string::npos) end = s.size();
    const std::string factor = s.substr(pos, end - pos);
    if (factor.size() < 1 || factor[0] != 'x') bad("factors look like x2 or x2^3");
    std::size_t k = 1;
    std::size_t var = 1;
    if (k < factor.size() && std::isdigit(static_cast<unsigned char>(factor[k]))) {
      var = 0;
      while (k < factor.size() && std::isdigit(static_cast<unsigned char>(factor[k]))) {
        var = var * 10 + static_cast<std::size_t>(factor[k] - '0');
        if (var > 1000) bad("variable index too large");
        ++k;
      }
    } else if (n != 1) {
      bad("bare x needs a variable index when n > 1");
    }
    if (var < 1 || var > n) bad("variable index out of range");
    std::size_t power = 1;
    if (k < factor.size()) {
      if (factor[k] != '^' || k + 1 == factor.size()) bad("expected ^ and an exponent");
      power = 0;
      for (++k; k < factor.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(factor[k]))) bad("exponent must be a number");
        power = power * 10 + static_cast<std::size_t>(factor[k] - '0');
        if (power > 64) bad("exponent too large");
      }
    }
    letters.insert(letters.end(), power, static_cast<std::uint16_t>(var - 1));
    pos = end + 1;
  }
  return Monomial(std::move(letters));
}

std::string word_text(const Monomial& m, std::size_t n) { return m.is_one() ? "o" : to_string(m, n); }

template <RingContext R>
class Runner {
  using S = typename R::Scalar;
  using P = Polynomial<R>;
  using Cfg = TwistConfig<R>;

 public:
  Runner(R ring, const Reader& rd, const Options& opt, Task task, Side side)
      : ring_(std::move(ring)), rd_(rd), opt_(opt), task_(task), side_(side) {}

  Outcome run() {
    build_twist();
    line("task: " + std::string(task_name(task_)));
    line("ring: " + tw_->describe());
    line("side: " + std::string(side_name(side_)));
    report_["task"] = task_name(task_);
    report_["twist"] = tw_->describe();
    report_["side"] = side_name(side_);
    int code = kExitOk;
    switch (task_) {
      case Task::interpolate:
        interpolate();
        break;
      case Task::verify:
        code = verify();
        break;
      case Task::independence:
        independence();
        break;
      case Task::eval:
        eval();
        break;
      case Task::derive:
        derive();
        break;
      case Task::vandermonde:
        vandermonde();
        break;
      case Task::minimal_poly:
        minimal_poly();
        break;
    }
    Outcome out;
    out.exit_code = code;
    if (opt_.json) {
      json full;
      full["status"] = code == kExitOk ? "ok" : "verify-failed";
      full["exit_code"] = code;
      for (auto& [k, v] : report_.items()) full[k] = v;
      out.out = full.dump(2) + "\n";
    } else {
      for (const auto& l : lines_) out.out += l + "\n";
    }
    return out;
  }

 private:
  void line(std::string s) { lines_.push_back(std::move(s)); }
  std::string fmt(const S& a) const { return ring_.format(a); }
  std::string fmt(const Point<R>& a) const {
    std::string s = "(";
    for (std::size_t k = 0; k < a.size(); ++k) s += (k ? ", " : "") + fmt(a[k]);
    return s + ")";
  }
  json jpoint(const Point<R>& a) const {
    json arr = json::array();
    for (const auto& c : a) arr.push_back(fmt(c));
    return arr;
  }

  S scalar(const Field& f) const {
    if (f.value->kind == Value::Kind::integer) return ring_.from_int(static_cast<long>(f.value->number));
    return scalar_text(f.str(), f);
  }

  S scalar_text(const std::string& text, const Field& f) const {
    try {
      return ring_.parse(text);
    } catch (const std::exception& e) {
      field_error(f.line(), f.path, "bad " + ring_.name() + " literal '" + text + "': " + e.what());
    }
  }

  // ---- twist -------------------------------------------------------------

  Automorphism<S> automorphism(const Field& f) const {
    const std::string s = strip_spaces(f.str());
    if (s == "identity") return identity_automorphism<S>();
    const std::size_t open = s.find('(');
    const std::string head = s.substr(0, open);
    std::string arg;
    if (open != std::string::npos) {
      if (s.back() != ')') field_error(f.line(), f.path, "unbalanced parenthesis in '" + s + "'");
      arg = s.substr(open + 1, s.size() - open - 2);
    }
    if (head == "conj" && open == std::string::npos) {
      if constexpr (std::is_same_v<R, GaussianRing>) {
        return conjugation();
      } else {
        field_error(f.line(), f.path, "conj is only available over gaussian_rationals");
      }
    }
    if (head == "frobenius" && open != std::string::npos) {
      if constexpr (std::is_same_v<R, GFRing>) {
        if (arg.empty() || arg.find_first_not_of("0123456789") != std::string::npos || arg.size() > 6) {
          field_error(f.line(), f.path, "frobenius needs a small non-negative integer");
        }
        return frobenius(ring_, static_cast<std::uint32_t>(std::stoul(arg)));
      } else {
        field_error(f.line(), f.path, "frobenius is only available over gf");
      }
    }
    if (head == "inner" && open != std::string::npos) {
      const S c = scalar_text(arg, f);
      if (c.is_zero()) field_error(f.line(), f.path, "inner automorphism needs a nonzero element");
      return inner_automorphism(c, fmt(c));
    }
    field_error(f.line(), f.path, "unknown automorphism '" + s + "' (identity, conj, frobenius(k), inner(c))");
  }

  // Extends declared values of delta_k on the ring generators to the whole
  // ring; delta vanishes on the prime field.
  typename Cfg::DeltaTable delta_table(const std::vector<Automorphism<S>>& sigma,
                                       const std::vector<std::vector<S>>& values) const {
    if constexpr (std::is_same_v<R, RationalRing>) {
      return [](std::size_t, const S&) { return S(); };
    } else if constexpr (std::is_same_v<R, GaussianRing>) {
      return [values](std::size_t k, const S& a) { return S(a.im) * values[k][0]; };
    } else if constexpr (std::is_same_v<R, QuaternionRing>) {
      return [sigma, values](std::size_t k, const S& a) {
        const S& di = values[k][0];
        const S& dj = values[k][1];
        const S dk = sigma[k](Quaternion::i()) * dj + di * Quaternion::j();
        const Rational z;
        return S(a.x, z, z, z) * di + S(a.y, z, z, z) * dj + S(a.z, z, z, z) * dk;
      };
    } else {
      const R ring = ring_;
      return [ring, sigma, values](std::size_t k, const S& a) {
        if (a.is_zero()) return ring.zero();
        const S g = ring.gen();
        const S sg = sigma[k](g);
        const S& d = values[k][0];
        if (!(sg == g)) return d * (sigma[k](a) - a) / (sg - g);
        const std::uint32_t e = ring.field->log(a.code());
        if (e == 0) return ring.zero();
        return ring.from_int(static_cast<long>(e % ring.field->characteristic())) * d *
               S(ring.field, ring.field->power_of_generator(e - 1));
      };
    }
  }

  void build_twist() {
    const std::size_t n = parse_count(rd_.require("twist", "n"), 1, 16);
    const Field sig = rd_.require("twist", "sigma");
    if (sig.size() != n) {
      field_error(sig.line(), sig.path, "expected " + std::to_string(n) + " automorphisms, got " + std::to_string(sig.size()));
    }
    std::vector<Automorphism<S>> sigma;
    for (std::size_t k = 0; k < n; ++k) sigma.push_back(automorphism(sig[k]));

    const auto kind_field = rd_.get("twist", "delta");
    const std::string kind = kind_field ? kind_field->str() : "zero";
    const auto vec = rd_.get("twist", "delta_vector");
    const auto vals = rd_.get("twist", "delta_values");
    if (vec && kind != "inner") field_error(vec->line(), vec->path, "only used with delta = \"inner\"");
    if (vals && kind != "table") field_error(vals->line(), vals->path, "only used with delta = \"table\"");

    typename Cfg::Delta delta;
    if (kind == "zero") {
      delta = Cfg::Delta::zero();
    } else if (kind == "inner") {
      const Field v = rd_.require("twist", "delta_vector");
      if (v.size() != n) field_error(v.line(), v.path, "expected " + std::to_string(n) + " entries");
      std::vector<S> entries;
      for (std::size_t k = 0; k < n; ++k) entries.push_back(scalar(v[k]));
      delta = Cfg::Delta::inner(std::move(entries));
    } else if (kind == "table") {
      const Field v = rd_.require("twist", "delta_values");
      if (v.size() != n) field_error(v.line(), v.path, "expected one list per variable");
      const std::size_t gens = ring_.generators().size();
      std::vector<std::vector<S>> values(n);
      for (std::size_t k = 0; k < n; ++k) {
        if (v[k].size() != gens) {
          field_error(v[k].line(), v[k].path,
                      "expected " + std::to_string(gens) + " values, one per generator of " + ring_.name());
        }
        for (std::size_t g = 0; g < gens; ++g) values[k].push_back(scalar(v[k][g]));
      }
      delta = Cfg::Delta::plugin(delta_table(sigma, values), "table");
    } else {
      field_error(kind_field->line(), kind_field->path, "expected \"zero\", \"inner\" or \"table\"");
    }
    tw_ = Cfg::diagonal(ring_, std::move(sigma), std::move(delta));

    const LawReport laws = validate_laws(*tw_, kLawSamples, opt_.seed);
    if (!laws.ok()) {
      const auto& v = laws.violations.front();
      field_error(rd_.section_line("twist"), "twist", "law '" + v.law + "' fails at " + v.witness);
    }
  }

  // ---- problem fields ------------------------------------------------------

  Point<R> point_of(const Field& f) const {
    const std::size_t n = tw_->n();
    if (f.value->kind != Value::Kind::array) {
      if (n == 1) return {scalar(f)};
      field_error(f.line(), f.path, "expected an array of " + std::to_string(n) + " coordinates");
    }
    if (f.size() != n) field_error(f.line(), f.path, "expected " + std::to_string(n) + " coordinates, got " + std::to_string(f.size()));
    Point<R> a;
    for (std::size_t k = 0; k < n; ++k) a.push_back(scalar(f[k]));
    return a;
  }

  ConstraintSpec<R> constraints() const {
    const Field pf = rd_.require("problem", "points");
    std::vector<Point<R>> points;
    for (std::size_t j = 0; j < pf.size(); ++j) {
      points.push_back(point_of(pf[j]));
      for (std::size_t i = 0; i < j; ++i) {
        if (points[i] == points[j]) field_error(pf[j].line(), pf[j].path, "repeats point " + std::to_string(i + 1));
      }
    }
    if (points.empty()) field_error(pf.line(), pf.path, "needs at least one point");
    std::vector<Monomial> chains(points.size());
    if (auto cf = rd_.get("problem", "chains")) {
      if (cf->size() != points.size()) {
        field_error(cf->line(), cf->path,
                    "expected " + std::to_string(points.size()) + " chain words, one per point, got " +
                        std::to_string(cf->size()));
      }
      for (std::size_t j = 0; j < points.size(); ++j) chains[j] = parse_word((*cf)[j], tw_->n());
    }
    return ConstraintSpec<R>(tw_, std::move(points), std::move(chains), side_);
  }

  InterpProblem<R> interp_problem() const {
    ConstraintSpec<R> spec = constraints();
    const Field tf = rd_.require("problem", "targets");
    if (tf.size() != spec.size()) {
      field_error(tf.line(), tf.path, "expected " + std::to_string(spec.size()) + " target lists, one per point, got " +
                                          std::to_string(tf.size()));
    }
    std::vector<std::vector<S>> targets;
    for (std::size_t j = 0; j < spec.size(); ++j) {
      const Field t = tf[j];
      const std::size_t want = spec.chains()[j].degree() + 1;
      if (t.size() != want) {
        field_error(t.line(), t.path,
                    "expected " + std::to_string(want) + " values for chain '" +
                        word_text(spec.chains()[j], tw_->n()) + "', got " + std::to_string(t.size()));
      }
      targets.emplace_back();
      for (std::size_t k = 0; k < want; ++k) targets.back().push_back(scalar(t[k]));
    }
    return InterpProblem<R>(std::move(spec), std::move(targets));
  }

  P polynomial() const {
    if (opt_.polynomial) {
      try {
        return parse_polynomial(tw_, *opt_.polynomial);
      } catch (const std::exception& e) {
        throw ParseError(std::string("--polynomial: ") + e.what());
      }
    }
    const Field f = rd_.require("problem", "polynomial");
    try {
      return parse_polynomial(tw_, f.str());
    } catch (const ParseError& e) {
      field_error(f.line(), f.path, e.what());
    }
  }

  // One label per constraint, in the order constraint_values uses.
  std::vector<std::pair<std::size_t, Monomial>> constraint_words(const ConstraintSpec<R>& spec) const {
    std::vector<std::pair<std::size_t, Monomial>> out;
    for (std::size_t j = 0; j < spec.size(); ++j) {
      for (const Monomial& w : chain_words(spec.chains()[j], side_)) out.emplace_back(j, w);
    }
    return out;
  }

  std::string type_text(const ConstraintSpec<R>& spec) const {
    std::string s = "(";
    for (std::size_t j = 0; j < spec.size(); ++j) {
      const Monomial& m = spec.chains()[j];
      s += j ? "," : "";
      s += tw_->n() == 1 ? std::to_string(m.degree()) : word_text(m, tw_->n());
    }
    return s + ")";
  }

  void describe_points(const ConstraintSpec<R>& spec) {
    json arr = json::array();
    for (std::size_t j = 0; j < spec.size(); ++j) {
      line("point " + std::to_string(j + 1) + ": " + fmt(spec.points()[j]) + ", chain " +
           word_text(spec.chains()[j], tw_->n()));
      arr.push_back({{"point", jpoint(spec.points()[j])}, {"chain", word_text(spec.chains()[j], tw_->n())}});
    }
    line("constraints: N = " + std::to_string(spec.total()));
    report_["points"] = arr;
    report_["N"] = spec.total();
  }

  // ---- tasks -----------------------------------------------------------

  void interpolate() {
    const InterpProblem<R> problem = interp_problem();
    describe_points(problem.constraints);
    const HermiteSolution<R> sol = hermite_solve(problem, true);
    const auto values = constraint_values(sol.vandermonde, problem.constraints);
    const auto want = problem.flat_targets();
    std::size_t ok = 0;
    for (std::size_t t = 0; t < want.size(); ++t) ok += values[t] == want[t];
    if (ok != want.size()) throw std::logic_error("interpolant failed verification");

    std::string dual = "unavailable";
    if (sol.dual_basis) dual = *sol.dual_basis == sol.vandermonde ? "same polynomial" : "different interpolant, verified";
    line("F = " + to_string(sol.vandermonde));
    line("degree: " + to_string(sol.vandermonde.degree()));
    line("dual basis: " + dual);
    line("verified: " + std::to_string(ok) + "/" + std::to_string(want.size()) + " constraints");
    report_["F"] = to_string(sol.vandermonde);
    report_["degree"] = to_string(sol.vandermonde.degree());
    report_["dual_basis"] = dual;
    if (sol.dual_basis) report_["dual_basis_F"] = to_string(*sol.dual_basis);
    report_["verified"] = ok;
  }

  int verify() {
    const InterpProblem<R> problem = interp_problem();
    const P f = polynomial();
    describe_points(problem.constraints);
    line("F = " + to_string(f));
    report_["F"] = to_string(f);
    const auto values = constraint_values(f, problem.constraints);
    const auto want = problem.flat_targets();
    const auto words = constraint_words(problem.constraints);
    std::size_t passed = 0;
    json checks = json::array();
    for (std::size_t t = 0; t < want.size(); ++t) {
      const bool pass = values[t] == want[t];
      passed += pass;
      const std::string word = word_text(words[t].second, tw_->n());
      line(std::string(pass ? "PASS" : "FAIL") + " point " + std::to_string(words[t].first + 1) + " word " + word +
           ": expected " + fmt(want[t]) + ", got " + fmt(values[t]));
      checks.push_back({{"point", words[t].first + 1},
                        {"word", word},
                        {"expected", fmt(want[t])},
                        {"actual", fmt(values[t])},
                        {"pass", pass}});
    }
    const bool low = f.degree() < static_cast<long>(problem.constraints.total());
    line("degree: " + to_string(f.degree()) + (low ? " (below N)" : " (not below N)"));
    line("result: " + std::to_string(passed) + "/" + std::to_string(want.size()) + " PASS");
    report_["checks"] = checks;
    report_["degree_below_N"] = low;
    report_["passed"] = passed;
    return passed == want.size() ? kExitOk : kExitVerifyFailed;
  }

  void independence() {
    const ConstraintSpec<R> spec = constraints();
    describe_points(spec);
    const ConstraintSpec<R> plain(tw_, spec.points(), std::vector<Monomial>(spec.size()), side_);
    const bool p_indep = is_dp_independent(plain);
    const bool dp = is_dp_independent(spec);
    const bool witness = dp_independent_by_witness(spec);
    const std::string type = type_text(spec);
    line(std::string("P-independent: ") + (p_indep ? "yes" : "no"));
    line(std::string(dp ? "" : "NOT ") + "DP-independent of type " + type);
    line(std::string("witness check: ") + (witness == dp ? "agrees" : "DISAGREES"));
    report_["type"] = type;
    report_["p_independent"] = p_indep;
    report_["dp_independent"] = dp;
    report_["witness_agrees"] = witness == dp;
    if (witness != dp) throw std::logic_error("dimension and witness independence tests disagree");
  }

  void eval() {
    const P f = polynomial();
    const Point<R> a = point_of(rd_.require("problem", "point"));
    const auto div = divide(f, a, side_);
    const std::string value_name = side_ == Side::right ? "F(a)" : "F_L(a)";
    line("F = " + to_string(f));
    line("a = " + fmt(a));
    line(value_name + " = " + fmt(div.remainder));
    json quotients = json::array();
    for (std::size_t i = 0; i < div.quotients.size(); ++i) {
      line("quotient " + std::to_string(i + 1) + ": " + to_string(div.quotients[i]));
      quotients.push_back(to_string(div.quotients[i]));
    }
    // The division must reassemble F before anything is reported.
    P back = P::constant(tw_, div.remainder);
    for (std::size_t i = 0; i < tw_->n(); ++i) {
      const P lin = P::linear(tw_, i, a[i]);
      back += side_ == Side::right ? div.quotients[i] * lin : lin * div.quotients[i];
    }
    if (!(back == f)) throw std::logic_error("division failed to reassemble the polynomial");
    report_["F"] = to_string(f);
    report_["point"] = jpoint(a);
    report_["value"] = fmt(div.remainder);
    report_["quotients"] = quotients;
  }

  void derive() {
    const P f = polynomial();
    const Point<R> a = point_of(rd_.require("problem", "point"));
    const Monomial m = parse_word(rd_.require("problem", "word"), tw_->n());
    line("F = " + to_string(f));
    line("a = " + fmt(a));
    line("word: " + word_text(m, tw_->n()));
    const auto values = chain_values(f, a, m, side_);
    const auto words = chain_words(m, side_);
    json chain = json::array();
    for (std::size_t t = 0; t < words.size(); ++t) {
      const std::string w = word_text(words[t], tw_->n());
      line("D[" + w + "] F(a) = " + fmt(values[t]));
      chain.push_back({{"word", w}, {"value", fmt(values[t])}});
    }
    const auto [derivative, value] = partial_chain(f, a, m, side_);
    line("derivative along " + word_text(m, tw_->n()) + ": " + to_string(derivative));
    report_["F"] = to_string(f);
    report_["point"] = jpoint(a);
    report_["word"] = word_text(m, tw_->n());
    report_["chain"] = chain;
    report_["derivative"] = to_string(derivative);
  }

  void vandermonde() {
    const ConstraintSpec<R> spec = constraints();
    describe_points(spec);
    std::size_t order = spec.total();
    if (auto of = rd_.get("problem", "order")) order = parse_count(*of, 0, 12);
    const auto v = build_vandermonde(spec, order);
    const std::size_t r = v.monomials.size();
    std::string words;
    json jwords = json::array();
    for (std::size_t t = 0; t < r; ++t) {
      words += (t ? ", " : "") + word_text(v.monomials[t], tw_->n());
      jwords.push_back(word_text(v.monomials[t], tw_->n()));
    }
    line("order: " + std::to_string(order));
    line("monomials: " + words);
    line("size: " + std::to_string(v.matrix.rows()) + " x " + std::to_string(v.matrix.cols()) +
         (side_ == Side::right ? " (rows by monomial)" : " (columns by monomial)"));
    json rows = json::array();
    for (std::size_t i = 0; i < v.matrix.rows(); ++i) {
      std::string row = "[";
      json jrow = json::array();
      for (std::size_t c = 0; c < v.matrix.cols(); ++c) {
        row += (c ? ", " : "") + fmt(v.matrix(i, c));
        jrow.push_back(fmt(v.matrix(i, c)));
      }
      line(row + "]");
      rows.push_back(jrow);
    }
    // Left row rank equals right column rank, so one rank serves both sides.
    const std::size_t rk = rank(v.matrix, Side::left);
    const bool square = v.matrix.rows() == v.matrix.cols();
    line("rank: " + std::to_string(rk));
    line(std::string("square: ") + (square ? "yes" : "no"));
    report_["order"] = order;
    report_["monomials"] = jwords;
    report_["matrix"] = rows;
    report_["rank"] = rk;
    report_["square"] = square;
  }

  void minimal_poly() {
    const ConstraintSpec<R> spec = constraints();
    describe_points(spec);
    P g(tw_);
    if (tw_->n() == 1) {
      g = univariate_minimal_polynomial(spec);
      line("generator = " + to_string(g));
    } else {
      std::size_t t = 1;
      if (auto tf = rd_.get("problem", "t")) t = parse_count(*tf, 1, static_cast<long long>(tw_->n()));
      g = algorithm2(spec, t - 1);
      line("member (built on x" + std::to_string(t) + ") = " + to_string(g));
      report_["variable"] = t;
    }
    if (!ideal_member(g, spec)) throw std::logic_error("constructed polynomial is not in the ideal");
    line("degree: " + to_string(g.degree()));
    line("ideal membership: verified");
    report_["polynomial"] = to_string(g);
    report_["degree"] = to_string(g.degree());
  }

  R ring_;
  const Reader& rd_;
  const Options& opt_;
  Task task_;
  Side side_;
  TwistPtr<R> tw_;
  std::vector<std::string> lines_;
  json report_ = json::object();
};

GFRing gf_ring(const Reader& rd) {
  const Field pf = rd.require("ring", "p");
  const Field mf = rd.require("ring", "m");
  const auto p = static_cast<std::uint32_t>(parse_count(pf, 2, 65521));
  const auto m = static_cast<std::uint32_t>(parse_count(mf, 1, 16));
  std::optional<std::vector<std::uint32_t>> modulus;
  const auto mod = rd.get("ring", "modulus");
  if (mod) {
    modulus.emplace();
    for (std::size_t k = 0; k < mod->size(); ++k) {
      modulus->push_back(static_cast<std::uint32_t>(parse_count((*mod)[k], 0, p - 1)));
    }
  }
  try {
    return GFRing(std::make_shared<GFField>(p, m, modulus));
  } catch (const std::exception& e) {
    const Field& at = mod ? *mod : pf;
    field_error(at.line(), at.path, e.what());
  }
}

Outcome run_document(const std::string& text, const Options& opt) {
  const Document doc = parse_document(text);
  check_schema(doc);
  const Reader rd(doc);

  const Field ff = rd.require("", "format");
  if (ff.integer() != 1) field_error(ff.line(), ff.path, "unsupported format version");

  Task task{};
  if (opt.task) {
    task = *opt.task;
  } else {
    const Field tf = rd.require("", "task");
    const auto t = task_from_name(tf.str());
    if (!t) field_error(tf.line(), tf.path, "unknown task '" + tf.str() + "'");
    task = *t;
  }
  Side side = Side::right;
  if (opt.side) {
    side = *opt.side;
  } else if (auto sf = rd.get("", "side")) {
    if (sf->str() == "left") {
      side = Side::left;
    } else if (sf->str() != "right") {
      field_error(sf->line(), sf->path, "expected \"right\" or \"left\"");
    }
  }

  const Field kf = rd.require("ring", "kind");
  const std::string& kind = kf.str();
  const bool is_gf = kind == "gf";
  for (const char* key : {"p", "m", "modulus"}) {
    if (!is_gf) {
      if (auto f = rd.get("ring", key)) field_error(f->line(), f->path, "only used with kind = \"gf\"");
    }
  }
  if (kind == "rationals") return Runner<RationalRing>(RationalRing{}, rd, opt, task, side).run();
  if (kind == "gaussian_rationals") return Runner<GaussianRing>(GaussianRing{}, rd, opt, task, side).run();
  if (kind == "quaternions") return Runner<QuaternionRing>(QuaternionRing{}, rd, opt, task, side).run();
  if (is_gf) return Runner<GFRing>(gf_ring(rd), rd, opt, task, side).run();
  field_error(kf.line(), kf.path, "expected rationals, gaussian_rationals, quaternions or gf");
}

Outcome failure(int code, const std::string& kind, const std::string& message, const Options& opt) {
  Outcome o;
  o.exit_code = code;
  o.err = "error: " + kind + ": " + message + "\n";
  if (opt.json) {
    json j;
    j["status"] = "error";
    j["exit_code"] = code;
    j["error"] = kind;
    j["message"] = message;
    o.out = j.dump(2) + "\n";
  }
  return o;
}

}  // namespace

std::optional<Task> task_from_name(std::string_view name) {
  static const std::map<std::string, Task, std::less<>> names = {
      {"interpolate", Task::interpolate}, {"verify", Task::verify},
      {"independence", Task::independence}, {"eval", Task::eval},
      {"derive", Task::derive}, {"vandermonde", Task::vandermonde},
      {"minimal_poly", Task::minimal_poly}, {"minimal-poly", Task::minimal_poly},
  };
  auto it = names.find(name);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

const char* task_name(Task t) {
  switch (t) {
    case Task::interpolate:
      return "interpolate";
    case Task::verify:
      return "verify";
    case Task::independence:
      return "independence";
    case Task::eval:
      return "eval";
    case Task::derive:
      return "derive";
    case Task::vandermonde:
      return "vandermonde";
    case Task::minimal_poly:
      return "minimal-poly";
  }
  return "?";
}

Outcome run_text(const std::string& text, const Options& opt) {
  try {
    return run_document(text, opt);
  } catch (const NotLeftCapable& e) {
    return failure(kExitNotLeftCapable, "not left-capable", e.what(), opt);
  } catch (const Infeasible& e) {
    return failure(kExitInfeasible, "infeasible", e.what(), opt);
  } catch (const ParseError& e) {
    return failure(kExitInvalid, "invalid problem", e.what(), opt);
  } catch (const std::invalid_argument& e) {
    return failure(kExitInvalid, "invalid problem", e.what(), opt);
  } catch (const std::out_of_range& e) {
    return failure(kExitInvalid, "invalid problem", e.what(), opt);
  } catch (const std::domain_error& e) {
    return failure(kExitInvalid, "invalid problem", e.what(), opt);
  } catch (const std::exception& e) {
    return failure(kExitInternal, "internal", e.what(), opt);
  }
}

Outcome run_file(const std::string& path, const Options& opt) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return failure(kExitInvalid, "invalid problem", "cannot read '" + path + "'", opt);
  std::ostringstream ss;
  ss << in.rdbuf();
  return run_text(ss.str(), opt);
}

}  // namespace skew::cli
