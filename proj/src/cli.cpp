#include "hallalg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "hallalg/octahedron.hpp"
#include "hallalg/ringel_hall.hpp"
#include "hallalg/twisted.hpp"

namespace hallalg::cli {

using nlohmann::json;

const std::vector<std::string>& algebra_names() {
  static const std::vector<std::string> names{"hall", "hall-dr", "dhall", "dhall-dr", "et", "motivic", "motivic-T"};
  return names;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"associativity", "rp",        "derived-rp", "prop25", "symmetry1",
                                              "symmetry2",     "pairing",   "phi",        "et",     "motivic-rp",
                                              "lemma-space",   "mot-phi",   "all"};
  return names;
}

namespace {

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

template <class Key, class Coeff, class Label>
std::string elt_string(const std::map<Key, Coeff>& e, Label label) {
  if (e.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : e) {
    if (!out.empty()) out += " + ";
    out += c.to_string() + "*" + label(k);
  }
  return out;
}

template <class Key, class Coeff, class Label>
json terms_json(const std::map<Key, Coeff>& e, Label label) {
  json out = json::array();
  for (const auto& [k, c] : e) out.push_back({{"obj", label(k)}, {"coeff", c.to_string()}});
  return out;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
  return out + ")";
}

// Lazily built algebras for one configuration.
class Engine {
 public:
  explicit Engine(const RunConfig& cfg)
      : cfg_(cfg),
        cat_(std::make_shared<Catalog>(Quiver::parse(cfg.quiver), cfg.p)),
        dc_(std::make_shared<DerivedCategory>(cat_, cfg.window, cfg.cap)),
        dh_(std::make_shared<DerivedHall>(dc_)) {}

  const RunConfig& cfg() const { return cfg_; }
  const Catalog& cat() const { return *cat_; }
  const DerivedCategory& dc() const { return *dc_; }
  const DerivedHall& dh() const { return *dh_; }

  const RingelHall& rh() {
    if (!rh_) rh_ = std::make_unique<RingelHall>(cat_, cfg_.invert_convention, cfg_.cap);
    return *rh_;
  }
  BasedAlgebra<ModClass, Rational>& rh_alg() {
    if (!rh_alg_) rh_alg_ = std::make_unique<BasedAlgebra<ModClass, Rational>>(rh().algebra());
    return *rh_alg_;
  }
  BasedAlgebra<DObj, Rational>& dh_alg() {
    if (!dh_alg_) dh_alg_ = std::make_unique<BasedAlgebra<DObj, Rational>>(dh_->algebra());
    return *dh_alg_;
  }
  const TwistedExt& et() {
    if (!et_) et_ = std::make_unique<TwistedExt>(dh_);
    return *et_;
  }
  const Octahedron& oc() {
    if (!oc_) oc_ = std::make_unique<Octahedron>(dc_);
    return *oc_;
  }
  const Motivic& mot() {
    if (!mot_) mot_ = std::make_unique<Motivic>(Quiver::parse(cfg_.quiver), cfg_.primes, cfg_.held_out, cfg_.window,
                                                cfg_.cap);
    return *mot_;
  }

  int summands(const std::string& algebra) const {
    if (cfg_.max_summands > 0) return cfg_.max_summands;
    return algebra == "et" || algebra.rfind("motivic", 0) == 0 ? 1 : 2;
  }
  std::vector<ModClass> modules() const { return cat_->classes_up_to(cfg_.max_dim); }
  std::vector<DObj> objects(int summands) const {
    std::vector<DObj> out;
    for (const auto& x : dc_->corpus(cfg_.min_shift, cfg_.max_shift, summands))
      if (dc_->total_dim(x) <= cfg_.max_dim) out.push_back(x);
    return out;
  }
  std::vector<DObj> triple_objects() const { return objects(cfg_.triple_summands); }

  std::string label(const ModClass& m) const { return cat_->to_string(m); }
  std::string label(const DObj& x) const { return dc_->to_string(x); }
  std::string label(const EtKey& k) { return et().to_string(k.k) + "|" + dc_->to_string(k.x); }

  EtKey parse_key(const std::string& s) {
    auto bar = s.find('|');
    if (bar == std::string::npos || s.empty() || s.front() != '(' || s[bar - 1] != ')')
      throw ConfigError("not a K-class key: '" + s + "'");
    KClass k;
    std::stringstream in(s.substr(1, bar - 2));
    std::string part;
    while (std::getline(in, part, ',')) k.push_back(std::stoi(part));
    if (static_cast<int>(k.size()) != cat_->quiver().vertex_count()) throw ConfigError("K-class of wrong rank: " + s);
    return EtKey{k, dc_->parse(s.substr(bar + 1))};
  }

  std::vector<std::string> basis(const std::string& algebra) {
    std::vector<std::string> out;
    if (algebra == "hall" || algebra == "hall-dr") {
      for (const auto& m : modules()) out.push_back(label(m));
    } else if (algebra == "et") {
      for (const auto& k : et().keys(objects(summands(algebra)))) out.push_back(label(k));
    } else {
      for (const auto& x : objects(summands(algebra))) out.push_back(label(x));
    }
    return out;
  }

  json product(const std::string& algebra, const std::string& xs, const std::string& ys) {
    auto lab = [this](const auto& k) { return label(k); };
    if (algebra == "hall" || algebra == "hall-dr") {
      ModClass a = cat_->parse(xs), b = cat_->parse(ys);
      return terms_json(algebra == "hall" ? rh().product(a, b) : rh().dual_product(a, b), lab);
    }
    if (algebra == "et") {
      EtElt a{{parse_key(xs), QuadExt(1)}}, b{{parse_key(ys), QuadExt(1)}};
      return terms_json(et().mul(a, b, EtSide::plus), lab);
    }
    DObj a = dc_->parse(xs), b = dc_->parse(ys);
    if (algebra == "dhall") return terms_json(dh_alg().structure(a, b), lab);
    if (algebra == "dhall-dr") return terms_json(dh_alg().dual_structure(a, b), lab);
    if (algebra == "motivic") return terms_json(mot().hall_mul(mot_basis(a), mot_basis(b)), lab);
    if (algebra == "motivic-T") return terms_json(mot().t_mul(mot_basis(a), mot_basis(b)), lab);
    throw ConfigError("unknown algebra '" + algebra + "'");
  }

 private:
  RunConfig cfg_;
  std::shared_ptr<Catalog> cat_;
  std::shared_ptr<DerivedCategory> dc_;
  std::shared_ptr<DerivedHall> dh_;
  std::unique_ptr<RingelHall> rh_;
  std::unique_ptr<BasedAlgebra<ModClass, Rational>> rh_alg_;
  std::unique_ptr<BasedAlgebra<DObj, Rational>> dh_alg_;
  std::unique_ptr<TwistedExt> et_;
  std::unique_ptr<Octahedron> oc_;
  std::unique_ptr<Motivic> mot_;
};

class Checks {
 public:
  explicit Checks(Engine& e) : e_(e) {}

  json take() { return std::move(out_); }

  void run(const std::string& suite) {
    if (suite == "all") {
      for (const auto& a : algebra_names()) associativity(a);
      for (const auto& s : suite_names())
        if (s != "all" && s != "associativity") run(s);
      return;
    }
    if (suite == "associativity") return associativity(e_.cfg().algebra);
    if (suite == "rp") return rp();
    if (suite == "derived-rp") return derived_rp();
    if (suite == "prop25") return prop25();
    if (suite == "symmetry1") return symmetry1();
    if (suite == "symmetry2") return symmetry2();
    if (suite == "pairing") return pairing();
    if (suite == "phi") return phi();
    if (suite == "et") return et();
    if (suite == "motivic-rp") return motivic_rp();
    if (suite == "lemma-space") return lemma_space();
    if (suite == "mot-phi") return mot_phi();
    throw ConfigError("unknown suite '" + suite + "'");
  }

 private:
  void add(const std::string& suite, const std::string& instance, const std::string& lhs, const std::string& rhs,
           bool pass) {
    out_.push_back({{"suite", suite}, {"instance", instance}, {"lhs", lhs}, {"rhs", rhs}, {"pass", pass}});
  }
  template <class T>
  std::string lab(const T& x) {
    return e_.label(x);
  }
  template <class Elt>
  void compare(const std::string& suite, const std::string& instance, const Elt& lhs, const Elt& rhs) {
    auto l = [this](const auto& k) { return e_.label(k); };
    add(suite, instance, elt_string(lhs, l), elt_string(rhs, l), lhs == rhs);
  }

  void associativity(const std::string& algebra) {
    const std::string suite = "associativity";
    if (algebra == "hall" || algebra == "hall-dr") {
      auto& alg = e_.rh_alg();
      auto mods = e_.modules();
      for (const auto& a : mods)
        for (const auto& b : mods)
          for (const auto& c : mods) {
            if (e_.cat().total_dim(a + b + c) > e_.cfg().max_dim) continue;
            auto ua = basis_elt<ModClass, Rational>(a), ub = basis_elt<ModClass, Rational>(b),
                 uc = basis_elt<ModClass, Rational>(c);
            std::string inst = algebra + " " + join({lab(a), lab(b), lab(c)});
            if (algebra == "hall")
              compare(suite, inst, alg.mul(alg.mul(ua, ub), uc), alg.mul(ua, alg.mul(ub, uc)));
            else
              compare(suite, inst, alg.dual_mul(alg.dual_mul(ua, ub), uc), alg.dual_mul(ua, alg.dual_mul(ub, uc)));
          }
      return;
    }
    auto objs = e_.triple_objects();
    if (algebra == "et") {
      const TwistedExt& et = e_.et();
      auto keys = et.keys(objs);
      for (const auto& x : keys)
        for (const auto& y : keys)
          for (const auto& z : keys) {
            EtElt a{{x, QuadExt(1)}}, b{{y, QuadExt(1)}}, c{{z, QuadExt(1)}};
            std::string inst = "et " + join({lab(x), lab(y), lab(z)});
            compare(suite, inst + " plus", et.mul(et.mul(a, b, EtSide::plus), c, EtSide::plus),
                    et.mul(a, et.mul(b, c, EtSide::plus), EtSide::plus));
            compare(suite, inst + " minus", et.mul(et.mul(a, b, EtSide::minus), c, EtSide::minus),
                    et.mul(a, et.mul(b, c, EtSide::minus), EtSide::minus));
          }
      return;
    }
    for (const auto& x : objs)
      for (const auto& y : objs)
        for (const auto& z : objs) {
          std::string inst = algebra + " " + join({lab(x), lab(y), lab(z)});
          if (algebra == "dhall" || algebra == "dhall-dr") {
            auto& alg = e_.dh_alg();
            auto ux = basis_elt<DObj, Rational>(x), uy = basis_elt<DObj, Rational>(y), uz = basis_elt<DObj, Rational>(z);
            if (algebra == "dhall")
              compare(suite, inst, alg.mul(alg.mul(ux, uy), uz), alg.mul(ux, alg.mul(uy, uz)));
            else
              compare(suite, inst, alg.dual_mul(alg.dual_mul(ux, uy), uz), alg.dual_mul(ux, alg.dual_mul(uy, uz)));
          } else {
            const Motivic& m = e_.mot();
            MotElt vx = mot_basis(x), vy = mot_basis(y), vz = mot_basis(z);
            if (algebra == "motivic")
              compare(suite, inst, m.hall_mul(m.hall_mul(vx, vy), vz), m.hall_mul(vx, m.hall_mul(vy, vz)));
            else
              compare(suite, inst, m.t_mul(m.t_mul(vx, vy), vz), m.t_mul(vx, m.t_mul(vy, vz)));
          }
        }
  }

  void rp() {
    const RingelHall& rh = e_.rh();
    const Catalog& cat = e_.cat();
    auto mods = e_.modules();
    for (const auto& a : mods)
      for (const auto& b : mods) {
        if (cat.total_dim(a + b) > e_.cfg().max_dim) continue;
        for (const auto& l : cat.classes_with_dim(cat.dim_vector(a + b))) {
          Rational lhs = rh.h(a, b, l);
          Rational rhs = rh.g(a, b, l) * Rational(aut_order(cat, a)) * Rational(aut_order(cat, b)) /
                         Rational(aut_order(cat, l));
          add("rp", join({lab(a), lab(b), lab(l)}), lhs.to_string(), rhs.to_string(), lhs == rhs);
        }
      }
  }

  void derived_rp() {
    const DerivedHall& dh = e_.dh();
    auto objs = e_.objects(e_.summands("dhall"));
    for (const auto& x : objs)
      for (const auto& y : objs) {
        std::set<DObj> ls;
        for (const auto& [l, c] : dh.product(x, y)) ls.insert(l);
        for (const auto& [l, c] : dh.dual_product(x, y)) ls.insert(l);
        for (const auto& l : ls) {
          Rational lhs = dh.h_const(x, y, l) * dh.t(x) * dh.t(y);
          Rational rhs = dh.F_const(x, y, l) * dh.t(l);
          add("derived-rp", join({lab(x), lab(y), lab(l)}), lhs.to_string(), rhs.to_string(), lhs == rhs);
        }
      }
  }

  void prop25() {
    const DerivedHall& dh = e_.dh();
    auto objs = e_.triple_objects();
    for (const auto& z : objs)
      for (const auto& l : objs)
        for (const auto& m : objs) {
          Prop25Values v = dh.prop25(z, l, m);
          std::string inst = join({lab(z), lab(l), lab(m)});
          add("prop25", inst + " hom-out", v.via_hom_out.to_string(), v.orbit_sum.to_string(),
              v.via_hom_out == v.orbit_sum);
          add("prop25", inst + " hom-in", v.via_hom_in.to_string(), v.orbit_sum.to_string(),
              v.via_hom_in == v.orbit_sum);
        }
  }

  void symmetry1() {
    const Octahedron& oc = e_.oc();
    for (const auto& k : oc.instances(e_.triple_objects())) {
      Symmetry1Report r = oc.symmetry1(k);
      add("symmetry1", oc.to_string(k), r.lhs.to_string(), r.rhs.to_string(), r.holds());
    }
  }

  void symmetry2() {
    const Octahedron& oc = e_.oc();
    auto sizes = [](const std::vector<std::int64_t>& v) {
      std::string s = "{";
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
      return s + "}";
    };
    auto flag = [](bool b) { return std::string(b ? "true" : "false"); };
    for (const auto& k : oc.instances(e_.triple_objects())) {
      Symmetry2Report r = oc.symmetry2(k);
      std::string inst = oc.to_string(k);
      add("symmetry2", inst + " f-surjective", flag(r.f_surjective), "true", r.f_surjective);
      add("symmetry2", inst + " f-fibers", sizes(r.f_fiber_sizes), "{" + r.f_fiber_expected.to_string() + "}",
          r.f_fibers);
      add("symmetry2", inst + " m-surjective", flag(r.m_surjective), "true", r.m_surjective);
      add("symmetry2", inst + " m-fibers", sizes(r.m_fiber_sizes), "{" + r.m_fiber_expected.to_string() + "}",
          r.m_fibers);
      add("symmetry2", inst + " braces", r.braces_lhs.to_string(), r.braces_rhs.to_string(), r.braces_identity());
      add("symmetry2", inst + " summed", r.summed_lhs.to_string(), r.summed_rhs.to_string(), r.summed_identity());
    }
  }

  void pairing() {
    const TwistedExt& et = e_.et();
    auto keys = et.keys(e_.triple_objects());
    for (const auto& x : keys)
      for (const auto& y : keys)
        for (const auto& z : keys) {
          EtElt a{{x, QuadExt(1)}}, b{{y, QuadExt(1)}}, c{{z, QuadExt(1)}};
          auto [lhs, rhs] = et.pairing_identity_sides(a, b, c);
          add("pairing", join({lab(x), lab(y), lab(z)}), lhs.to_string(), rhs.to_string(), lhs == rhs);
        }
  }

  void phi() {
    auto& ra = e_.rh_alg();
    auto mods = e_.modules();
    for (const auto& a : mods)
      for (const auto& b : mods) {
        if (e_.cat().total_dim(a + b) > e_.cfg().max_dim) continue;
        auto ua = basis_elt<ModClass, Rational>(a), ub = basis_elt<ModClass, Rational>(b);
        compare("phi", "hall " + join({lab(a), lab(b)}), ra.phi(ra.dual_mul(ua, ub)), ra.mul(ra.phi(ua), ra.phi(ub)));
      }
    auto& da = e_.dh_alg();
    auto objs = e_.objects(e_.summands("dhall"));
    for (const auto& x : objs)
      for (const auto& y : objs) {
        auto ux = basis_elt<DObj, Rational>(x), uy = basis_elt<DObj, Rational>(y);
        compare("phi", "dhall " + join({lab(x), lab(y)}), da.phi(da.dual_mul(ux, uy)), da.mul(da.phi(ux), da.phi(uy)));
      }
    const TwistedExt& et = e_.et();
    auto keys = et.keys(e_.triple_objects());
    for (const auto& x : keys)
      for (const auto& y : keys) {
        EtElt a{{x, QuadExt(1)}}, b{{y, QuadExt(1)}};
        compare("phi", "et " + join({lab(x), lab(y)}), et.dr_phi(et.dr_mul(a, b)),
                et.mul(et.dr_phi(a), et.dr_phi(b), EtSide::minus));
      }
  }

  void et() {
    // the twisted suite: both sides associative and the Drinfeld dual associative
    const TwistedExt& et = e_.et();
    auto keys = et.keys(e_.triple_objects());
    for (const auto& x : keys)
      for (const auto& y : keys)
        for (const auto& z : keys) {
          EtElt a{{x, QuadExt(1)}}, b{{y, QuadExt(1)}}, c{{z, QuadExt(1)}};
          std::string inst = join({lab(x), lab(y), lab(z)});
          compare("et", inst + " plus", et.mul(et.mul(a, b, EtSide::plus), c, EtSide::plus),
                  et.mul(a, et.mul(b, c, EtSide::plus), EtSide::plus));
          compare("et", inst + " minus", et.mul(et.mul(a, b, EtSide::minus), c, EtSide::minus),
                  et.mul(a, et.mul(b, c, EtSide::minus), EtSide::minus));
          compare("et", inst + " drinfeld", et.dr_mul(et.dr_mul(a, b), c), et.dr_mul(a, et.dr_mul(b, c)));
        }
  }

  void motivic_rp() {
    const Motivic& m = e_.mot();
    const int q = m.held_out();
    const DerivedHall& dh = m.hall(q);
    auto objs = e_.triple_objects();
    auto at_q = [&](const MotElt& e) {
      DerivedHall::Table t;
      for (const auto& [k, c] : e) t.emplace(k, c.eval(Rational(q)));
      return t;
    };
    for (const auto& x : objs)
      for (const auto& y : objs) {
        for (const auto& [c, cp] : m.strata(x, y)) {
          auto [lhs, rhs] = m.rp_sides(x, c, y);
          add("motivic-rp", join({lab(x), lab(c), lab(y)}), lhs.to_string(), rhs.to_string(), lhs == rhs);
        }
        std::string inst = join({lab(x), lab(y)}) + " at " + std::to_string(q);
        compare("motivic-rp", inst + " v-product", at_q(m.hall_mul(mot_basis(x), mot_basis(y))), dh.dual_product(x, y));
        compare("motivic-rp", inst + " u-product", at_q(m.t_mul(mot_basis(x), mot_basis(y))), dh.product(x, y));
      }
  }

  void lemma_space() {
    const Motivic& m = e_.mot();
    auto objs = e_.triple_objects();
    for (const auto& x : objs)
      for (const auto& y : objs)
        for (const auto& [c, cp] : m.strata(x, y)) {
          LemmaSpaceReport r = m.lemma_space(x, y, c);
          add("lemma-space", join({lab(x), lab(y), lab(c)}),
              r.end_l.poly.to_string() + "; " + r.end_z.poly.to_string(),
              r.end_l_expected.to_string() + "; " + r.end_z_expected.to_string(), r.holds());
        }
  }

  void mot_phi() {
    const Motivic& m = e_.mot();
    auto objs = e_.triple_objects();
    for (const auto& x : objs)
      for (const auto& y : objs)
        compare("mot-phi", join({lab(x), lab(y)}), m.phi(m.hall_mul(mot_basis(x), mot_basis(y))),
                m.t_mul(m.phi(mot_basis(x)), m.phi(mot_basis(y))));
  }

  Engine& e_;
  json out_ = json::array();
};

json header(const RunConfig& cfg) {
  json out{{"quiver", cfg.quiver}, {"p", cfg.p}, {"algebra", cfg.algebra}};
  if (cfg.algebra.rfind("motivic", 0) == 0) {
    out["primes"] = cfg.primes;
    out["held_out"] = cfg.held_out;
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string str(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string csv_field(const json& j) { return csv_field(str(j)); }

}  // namespace

void validate(const RunConfig& cfg) {
  if (!is_prime(cfg.p)) throw ConfigError("p = " + std::to_string(cfg.p) + " is not prime");
  if (cfg.window < 0) throw ConfigError("the shift window must be nonnegative");
  if (cfg.cap < 1) throw ConfigError("the enumeration cap must be positive");
  if (!contains(algebra_names(), cfg.algebra)) throw ConfigError("unknown algebra '" + cfg.algebra + "'");
  if (!contains(suite_names(), cfg.suite)) throw ConfigError("unknown suite '" + cfg.suite + "'");
  if (cfg.format != "json" && cfg.format != "csv" && cfg.format != "text")
    throw ConfigError("unknown format '" + cfg.format + "'");
  if (cfg.min_shift > cfg.max_shift) throw ConfigError("empty shift range");
  if (cfg.max_summands < 0 || cfg.triple_summands < 0 || cfg.max_dim < 0)
    throw ConfigError("summand and dimension bounds must be nonnegative");
  std::set<int> seen;
  for (int q : cfg.primes) {
    if (!is_prime(q)) throw ConfigError("motivic prime " + std::to_string(q) + " is not prime");
    if (!seen.insert(q).second) throw ConfigError("motivic prime " + std::to_string(q) + " listed twice");
  }
  if (cfg.primes.empty()) throw ConfigError("no motivic primes");
  if (!is_prime(cfg.held_out) || seen.count(cfg.held_out))
    throw ConfigError("the held-out prime must be prime and not among the fit primes");
  try {
    Quiver q = Quiver::parse(cfg.quiver);
    if (!q.is_type_a()) throw ConfigError("quiver '" + cfg.quiver + "' is not of type A");
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

json cmd_catalog(const RunConfig& cfg) {
  validate(cfg);
  Catalog cat(Quiver::parse(cfg.quiver), cfg.p);
  json out{{"quiver", cfg.quiver}, {"p", cfg.p}};
  json rows = json::array(), hom = json::array(), ext = json::array();
  for (int i = 0; i < cat.size(); ++i) {
    rows.push_back({{"label", cat.label_name(i)},
                    {"dims", cat.dim_vector(i)},
                    {"aut", aut_order(cat, ModClass::single(i))},
                    {"projective", cat.is_projective(i)}});
    json h = json::array(), e = json::array();
    for (int j = 0; j < cat.size(); ++j) {
      h.push_back(cat.hom(i, j));
      e.push_back(cat.ext(i, j));
    }
    hom.push_back(h);
    ext.push_back(e);
  }
  out["indecomposables"] = rows;
  out["hom"] = hom;
  out["ext"] = ext;
  return out;
}

json cmd_table(const RunConfig& cfg) {
  validate(cfg);
  Engine e(cfg);
  json out = header(cfg);
  std::vector<std::string> basis = e.basis(cfg.algebra);
  out["basis"] = basis;
  json products = json::array(), errors = json::array();
  for (const auto& x : basis)
    for (const auto& y : basis) {
      try {
        products.push_back({{"x", x}, {"y", y}, {"terms", e.product(cfg.algebra, x, y)}});
      } catch (const EnumerationTooLarge& err) {
        errors.push_back({{"x", x}, {"y", y}, {"error", err.what()}});
      }
    }
  out["products"] = products;
  if (!errors.empty()) out["errors"] = errors;
  return out;
}

json product_terms(const RunConfig& cfg, const std::string& x, const std::string& y) {
  validate(cfg);
  Engine e(cfg);
  return e.product(cfg.algebra, x, y);
}

json cmd_check(const RunConfig& cfg) {
  validate(cfg);
  Engine e(cfg);
  json out = header(cfg);
  out["suite"] = cfg.suite;
  Checks checks(e);
  checks.run(cfg.suite);
  json list = checks.take();
  std::size_t failed = 0;
  for (const auto& c : list)
    if (!c["pass"].get<bool>()) ++failed;
  out["checks"] = list;
  out["checked"] = list.size();
  out["failed"] = failed;
  out["pass"] = failed == 0;
  return out;
}

int exit_code(const json& report) {
  if (report.contains("error")) return report.value("exit", kExitConfig);
  if (report.contains("errors") && !report["errors"].empty()) return kExitCap;
  if (report.contains("pass") && !report["pass"].get<bool>()) return kExitCheckFailure;
  return kExitPass;
}

std::string render(const json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  std::ostringstream os;
  const bool csv = format == "csv";
  if (report.contains("error")) {
    if (csv)
      os << "error\n" << csv_field(report["error"].get<std::string>()) << "\n";
    else
      os << "error: " << report["error"].get<std::string>() << "\n";
    return os.str();
  }
  if (report.contains("indecomposables")) {
    const json& rows = report["indecomposables"];
    if (csv) {
      os << "label,dims,aut,projective\n";
      for (const auto& r : rows)
        os << r["label"].get<std::string>() << "," << csv_field(r["dims"].dump()) << "," << r["aut"] << ","
           << r["projective"] << "\n";
      return os.str();
    }
    os << "quiver " << str(report["quiver"]) << " over F_" << report["p"] << ": " << rows.size()
       << " indecomposables\n";
    for (const auto& r : rows)
      os << "  " << r["label"].get<std::string>() << "  dims " << r["dims"].dump() << "  |Aut| " << r["aut"]
         << (r["projective"].get<bool>() ? "  projective" : "") << "\n";
    for (const char* name : {"hom", "ext"}) {
      os << name << " dimensions (row to column):\n";
      for (std::size_t i = 0; i < rows.size(); ++i) {
        os << "  " << rows[i]["label"].get<std::string>();
        for (const auto& v : report[name][i]) os << " " << v;
        os << "\n";
      }
    }
    return os.str();
  }
  if (report.contains("products")) {
    if (csv) {
      os << "x,y,obj,coeff\n";
      for (const auto& p : report["products"])
        for (const auto& t : p["terms"])
          os << csv_field(p["x"]) << "," << csv_field(p["y"]) << "," << csv_field(t["obj"]) << ","
             << csv_field(t["coeff"]) << "\n";
      if (report.contains("errors"))
        for (const auto& err : report["errors"])
          os << csv_field(err["x"]) << "," << csv_field(err["y"]) << ",error," << csv_field(err["error"]) << "\n";
      return os.str();
    }
    os << str(report["algebra"]) << " over " << str(report["quiver"]) << ", p = " << report["p"] << ", "
       << report["basis"].size() << " basis elements\n";
    for (const auto& p : report["products"]) {
      os << p["x"].get<std::string>() << " * " << p["y"].get<std::string>() << " = ";
      if (p["terms"].empty()) os << "0";
      bool first = true;
      for (const auto& t : p["terms"]) {
        os << (first ? "" : " + ") << "(" << t["coeff"].get<std::string>() << ") " << t["obj"].get<std::string>();
        first = false;
      }
      os << "\n";
    }
    if (report.contains("errors"))
      for (const auto& err : report["errors"])
        os << "error " << err["x"].get<std::string>() << " * " << err["y"].get<std::string>() << ": "
           << err["error"].get<std::string>() << "\n";
    return os.str();
  }
  if (report.contains("checks")) {
    if (csv) {
      os << "suite,instance,lhs,rhs,pass\n";
      for (const auto& c : report["checks"])
        os << csv_field(c["suite"]) << "," << csv_field(c["instance"]) << "," << csv_field(c["lhs"]) << ","
           << csv_field(c["rhs"]) << "," << (c["pass"].get<bool>() ? "true" : "false") << "\n";
      return os.str();
    }
    for (const auto& c : report["checks"])
      os << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["suite"].get<std::string>() << " "
         << c["instance"].get<std::string>() << ": " << c["lhs"].get<std::string>() << " | "
         << c["rhs"].get<std::string>() << "\n";
    os << report["checked"] << " checks, " << report["failed"] << " failed\n";
    return os.str();
  }
  return report.dump(2) + "\n";
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Hall algebras of type-A quivers over prime fields"};
  app.fallthrough();
  app.require_subcommand(1, 1);
  app.add_option("--quiver", cfg.quiver, "A<n> or A<n>:<orientation>, e.g. A3:LR")->envname("HALLALG_QUIVER");
  app.add_option("--prime", cfg.p, "prime field size")->envname("HALLALG_PRIME");
  app.add_option("--primes", cfg.primes, "motivic fit primes")->delimiter(',')->envname("HALLALG_PRIMES");
  app.add_option("--held-out", cfg.held_out, "motivic held-out prime")->envname("HALLALG_HELD_OUT");
  app.add_option("--window", cfg.window, "shift window")->envname("HALLALG_WINDOW");
  app.add_option("--cap", cfg.cap, "enumeration cap")->envname("HALLALG_CAP");
  app.add_option("--algebra", cfg.algebra, "hall, hall-dr, dhall, dhall-dr, et, motivic, motivic-T")
      ->envname("HALLALG_ALGEBRA");
  app.add_option("--suite", cfg.suite, "identity suite for check")->envname("HALLALG_SUITE");
  app.add_option("--format", cfg.format, "json, csv or text")->envname("HALLALG_FORMAT");
  app.add_option("--out", cfg.out, "output file (default stdout)")->envname("HALLALG_OUT");
  app.add_option("--min-shift", cfg.min_shift, "lowest shift in the corpus");
  app.add_option("--max-shift", cfg.max_shift, "highest shift in the corpus");
  app.add_option("--summands", cfg.max_summands, "summand bound for bases and pair suites (0: per algebra)");
  app.add_option("--triple-summands", cfg.triple_summands, "summand bound for three-object suites");
  app.add_option("--max-dim", cfg.max_dim, "total dimension bound");
  app.add_flag("--invert-convention", cfg.invert_convention, "swap submodule and quotient in Hall numbers");
  auto* catalog = app.add_subcommand("catalog", "indecomposables with Hom, Ext and automorphism orders");
  auto* table = app.add_subcommand("table", "multiplication table over the corpus basis");
  auto* check = app.add_subcommand("check", "run an identity suite");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitConfig;
  }
  json report;
  try {
    if (catalog->parsed())
      report = cmd_catalog(cfg);
    else if (table->parsed())
      report = cmd_table(cfg);
    else if (check->parsed())
      report = cmd_check(cfg);
  } catch (const EnumerationTooLarge& e) {
    report = {{"error", e.what()}, {"exit", kExitCap}};
  } catch (const ConfigError& e) {
    report = {{"error", e.what()}, {"exit", kExitConfig}};
  } catch (const std::invalid_argument& e) {
    report = {{"error", e.what()}, {"exit", kExitConfig}};
  } catch (const std::out_of_range& e) {
    report = {{"error", e.what()}, {"exit", kExitConfig}};
  }
  if (report.contains("error")) err << "error: " << report["error"].get<std::string>() << "\n";
  if (report.contains("error") && cfg.format == "text") return exit_code(report);
  std::string text = render(report, cfg.format);
  if (cfg.out.empty()) {
    out << text;
  } else {
    std::ofstream file(cfg.out);
    if (!file) {
      err << "cannot write " << cfg.out << "\n";
      return kExitConfig;
    }
    file << text;
  }
  return exit_code(report);
}

}  // namespace hallalg::cli
