#include "posmat/json_io.hpp"

#include "posmat/error.hpp"

namespace posmat {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string str_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw ParseError(std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

long int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("field \"") + key + "\" must be an integer");
  return v.get<long>();
}

mpz_class parse_integer(const std::string& s) {
  mpz_class z;
  if (s.empty() || z.set_str(s, 10) != 0) throw ParseError("not a decimal integer: \"" + s + "\"");
  return z;
}

Json poly_to_json(const Poly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(rational_string(c));
  if (out.empty()) out.push_back("0");
  return out;
}

Poly poly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be a list of coefficients");
  std::vector<mpq_class> coeffs;
  for (const auto& c : j) {
    if (!c.is_string()) throw ParseError("coefficients must be strings");
    coeffs.push_back(parse_rational(c.get<std::string>()));
  }
  return Poly(std::move(coeffs));
}

template <typename F>
auto wrap(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

std::string rational_string(const mpq_class& q) { return q.get_str(); }

mpq_class parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return mpq_class(parse_integer(s));
  const mpz_class num = parse_integer(s.substr(0, slash));
  const mpz_class den = parse_integer(s.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in \"" + s + "\"");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

Json to_json(const RatFun& f) { return Json{{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}}; }

RatFun ratfun_from_json(const Json& j) {
  const Poly den = poly_from_json(field(j, "den"));
  if (den.is_zero()) throw ParseError("zero denominator");
  return RatFun(poly_from_json(field(j, "num")), den);
}

Json to_json(const RingElement& x) {
  Json out{{"ring", ring_name(x.ring())}};
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, mpq_class>) {
          out["num"] = v.get_num().get_str();
          out["den"] = v.get_den().get_str();
        } else if constexpr (std::is_same_v<T, Dyadic>) {
          out["num"] = v.num.get_str();
          out["exp"] = v.exp;
        } else if constexpr (std::is_same_v<T, RatFun>) {
          out["num"] = poly_to_json(v.num());
          out["den"] = poly_to_json(v.den());
        } else {
          Json terms = Json::array();
          for (const auto& [deg, f] : v.terms) terms.push_back(Json{{"tdeg", deg}, {"coef", to_json(f)}});
          out["terms"] = std::move(terms);
        }
      },
      x.payload());
  return out;
}

RingElement element_from_json(const Json& j, std::optional<RingId> expected) {
  return wrap([&] {
    const RingId ring = parse_ring(str_field(j, "ring"));
    if (expected && *expected != ring) throw ParseError("scalar ring does not match the enclosing ring");
    switch (ring) {
      case RingId::Q: {
        const mpz_class num = parse_integer(str_field(j, "num"));
        const mpz_class den = parse_integer(str_field(j, "den"));
        if (den <= 0) throw ParseError("Q scalar needs den > 0");
        mpq_class q(num, den);
        q.canonicalize();
        if (q.get_den() != den) throw ParseError("Q scalar is not in lowest terms");
        return RingElement::rational(ring, q);
      }
      case RingId::Dyadic: {
        const mpz_class num = parse_integer(str_field(j, "num"));
        const long exp = int_field(j, "exp");
        if (num == 0 ? exp != 0 : mpz_even_p(num.get_mpz_t()) != 0) {
          throw ParseError("DYADIC scalar needs an odd numerator (or 0 with exp 0)");
        }
        return RingElement::dyadic(num, exp);
      }
      case RingId::RatFun: return RingElement::ratfun(ring, ratfun_from_json(j));
      default: {
        const Json& terms = field(j, "terms");
        if (!terms.is_array()) throw ParseError("SKEW terms must be a list");
        SkewPoly p;
        for (const auto& t : terms) {
          const long deg = int_field(t, "tdeg");
          if (!p.terms.emplace(deg, ratfun_from_json(field(t, "coef"))).second) {
            throw ParseError("repeated t-degree in SKEW scalar");
          }
        }
        return RingElement::skew(std::move(p));
      }
    }
  });
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.size(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"n", m.size()}, {"ring", ring_name(m.ring())}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const Json& j) {
  return wrap([&] {
    const long n = int_field(j, "n");
    if (n < 1) throw ParseError("matrix size must be positive");
    const RingId ring = parse_ring(str_field(j, "ring"));
    const Json& rows = field(j, "entries");
    if (!rows.is_array() || static_cast<long>(rows.size()) != n) throw ParseError("entries must have n rows");
    std::vector<RingElement> e;
    for (const auto& row : rows) {
      if (!row.is_array() || static_cast<long>(row.size()) != n) throw ParseError("each row must have n entries");
      for (const auto& x : row) e.push_back(element_from_json(x, ring));
    }
    return Matrix(ring, static_cast<int>(n), std::move(e));
  });
}

Json to_json(const Permutation& p) { return Json(p.one_based()); }

Permutation permutation_from_json(const Json& j) {
  return wrap([&] {
    if (!j.is_array()) throw ParseError("permutation must be a list of one-based images");
    const auto images = j.get<std::vector<int>>();
    return Permutation::from_one_based(images);
  });
}

Json to_json(const MonomialMatrix& m) {
  Json diag = Json::array();
  for (const auto& d : m.diag) diag.push_back(to_json(d));
  return Json{{"diag", std::move(diag)}, {"perm", to_json(m.perm)}};
}

Json to_json(const GeneratorWord& w) {
  Json seq = Json::array();
  for (const auto& g : w.seq) {
    if (const auto* p = std::get_if<PermGen>(&g)) {
      seq.push_back(Json{{"perm", to_json(p->sigma)}});
    } else if (const auto* e = std::get_if<ElemGen>(&g)) {
      seq.push_back(Json{{"elem", Json{{"i", e->i + 1}, {"j", e->j + 1}, {"x", to_json(e->x)}}}});
    } else {
      Json d = Json::array();
      for (const auto& x : std::get<DiagGen>(g).d) d.push_back(to_json(x));
      seq.push_back(Json{{"diag", std::move(d)}});
    }
  }
  return Json{{"n", w.n}, {"ring", ring_name(w.ring)}, {"seq", std::move(seq)}};
}

GeneratorWord word_from_json(const Json& j) {
  return wrap([&] {
    GeneratorWord w;
    w.n = static_cast<int>(int_field(j, "n"));
    if (w.n < 1) throw ParseError("word size must be positive");
    w.ring = parse_ring(str_field(j, "ring"));
    const Json& seq = field(j, "seq");
    if (!seq.is_array()) throw ParseError("seq must be a list");
    for (const auto& g : seq) {
      if (g.contains("perm")) {
        w.seq.emplace_back(PermGen{permutation_from_json(g.at("perm"))});
      } else if (g.contains("elem")) {
        const Json& e = g.at("elem");
        w.seq.emplace_back(ElemGen{static_cast<int>(int_field(e, "i")) - 1, static_cast<int>(int_field(e, "j")) - 1,
                                   element_from_json(field(e, "x"), w.ring)});
      } else if (g.contains("diag")) {
        std::vector<RingElement> d;
        for (const auto& x : g.at("diag")) d.push_back(element_from_json(x, w.ring));
        w.seq.emplace_back(DiagGen{std::move(d)});
      } else {
        throw ParseError("generator must be perm, elem or diag");
      }
    }
    w.validate();
    return w;
  });
}

Json to_json(const PEquivChain& c) {
  Json steps = Json::array();
  for (const auto& s : c.steps) {
    steps.push_back(Json{{"p", to_json(s.p)},
                         {"p_tilde", to_json(s.p_tilde)},
                         {"q", to_json(s.q)},
                         {"q_tilde", to_json(s.q_tilde)},
                         {"a", to_json(s.a)},
                         {"a_next", to_json(s.a_next)}});
  }
  return Json{{"steps", std::move(steps)}};
}

PEquivChain chain_from_json(const Json& j) {
  return wrap([&] {
    PEquivChain c;
    for (const auto& s : field(j, "steps")) {
      c.steps.push_back({word_from_json(field(s, "p")), word_from_json(field(s, "p_tilde")),
                         word_from_json(field(s, "q")), word_from_json(field(s, "q_tilde")),
                         matrix_from_json(field(s, "a")), matrix_from_json(field(s, "a_next"))});
    }
    return c;
  });
}

Json to_json(const RingMapDescriptor& c) {
  if (c.is_identity()) return Json{{"variant", "identity"}};
  Json out{{"variant", "affine"}, {"a", rational_string(c.a)}, {"b", rational_string(c.b)}};
  if (c.ring == RingId::Skew) out["t_coef"] = to_json(c.t_coef);
  return out;
}

RingMapDescriptor ringmap_from_json(const Json& j, RingId ring) {
  return wrap([&] {
    const std::string variant = str_field(j, "variant");
    if (variant == "identity") return RingMapDescriptor::identity(ring);
    if (variant != "affine") throw ParseError("unknown ring map variant \"" + variant + "\"");
    const mpq_class a = j.contains("a") ? parse_rational(str_field(j, "a")) : mpq_class(1);
    const mpq_class b = j.contains("b") ? parse_rational(str_field(j, "b")) : mpq_class(0);
    const RatFun g = j.contains("t_coef") ? ratfun_from_json(j.at("t_coef")) : RatFun::constant(1);
    return RingMapDescriptor::affine(ring, a, b, g);
  });
}

Json to_json(const CentralHomDescriptor& h) {
  Json gamma = Json::object();
  for (const auto& [p, v] : h.gamma) gamma[std::to_string(p)] = rational_string(v);
  Json out{{"gamma", std::move(gamma)}};
  if (h.degree_weight != 1) out["degree_weight"] = rational_string(h.degree_weight);
  return out;
}

CentralHomDescriptor homothety_from_json(const Json& j, RingId ring) {
  return wrap([&] {
    CentralHomDescriptor h = CentralHomDescriptor::trivial(ring);
    const Json& gamma = field(j, "gamma");
    if (!gamma.is_object()) throw ParseError("gamma must be an object keyed by primes");
    for (const auto& [key, value] : gamma.items()) {
      const mpz_class p = parse_integer(key);
      if (p < 2 || !p.fits_ulong_p()) throw ParseError("gamma key must be a prime");
      if (!value.is_string()) throw ParseError("gamma values must be strings");
      const mpq_class v = parse_rational(value.get<std::string>());
      if (v != 1) h.gamma.emplace(p.get_ui(), v);
    }
    if (j.contains("degree_weight")) h.degree_weight = parse_rational(str_field(j, "degree_weight"));
    return h;
  });
}

Json to_json(const StandardTriple& t) {
  return Json{{"n", t.size()},
              {"ring", ring_name(t.ring())},
              {"M", to_json(t.m)},
              {"ringmap", to_json(t.c)},
              {"homothety", to_json(t.lambda)}};
}

Json to_json(const AutomorphismDescription& d) {
  Json parts = Json::array();
  for (const auto& part : d.compose) {
    std::visit(
        [&](const auto& p) {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, InnerPart>) {
            parts.push_back(Json{{"inner", to_json(p.m.to_matrix())}});
          } else if constexpr (std::is_same_v<T, RingMapDescriptor>) {
            parts.push_back(Json{{"ringmap", to_json(p)}});
          } else if constexpr (std::is_same_v<T, CentralHomDescriptor>) {
            parts.push_back(Json{{"homothety", to_json(p)}});
          } else if constexpr (std::is_same_v<T, FlipPart>) {
            parts.push_back(Json{{"flip", Json::object()}});
          } else {
            parts.push_back(Json{{"transpose", Json::object()}});
          }
        },
        part);
  }
  return Json{{"n", d.n}, {"ring", ring_name(d.ring)}, {"compose", std::move(parts)}};
}

AutomorphismDescription description_from_json(const Json& j) {
  return wrap([&] {
    AutomorphismDescription d;
    d.n = static_cast<int>(int_field(j, "n"));
    if (d.n < 3) throw ParseError("automorphism descriptions need n >= 3");
    d.ring = parse_ring(str_field(j, "ring"));
    const Json& parts = field(j, "compose");
    if (!parts.is_array()) throw ParseError("compose must be a list");
    for (const auto& p : parts) {
      if (p.contains("inner")) {
        const Matrix m = matrix_from_json(p.at("inner"));
        if (m.size() != d.n || m.ring() != d.ring) throw ParseError("inner matrix does not match n/ring");
        const auto mono = monomial_recognize(m);
        if (!mono) throw ParseError("inner part must be a monomial matrix with positive unit entries");
        d.compose.emplace_back(InnerPart{*mono});
      } else if (p.contains("ringmap")) {
        d.compose.emplace_back(ringmap_from_json(p.at("ringmap"), d.ring));
      } else if (p.contains("homothety")) {
        d.compose.emplace_back(homothety_from_json(p.at("homothety"), d.ring));
      } else if (p.contains("flip")) {
        d.compose.emplace_back(FlipPart{});
      } else if (p.contains("transpose")) {
        d.compose.emplace_back(TransposePart{});
      } else {
        throw ParseError("unknown automorphism part");
      }
    }
    return d;
  });
}

Json to_json(const DecompositionReport& r) {
  Json out{{"verdict", verdict_name(r.verdict)}};
  if (r.triple) out["triple"] = to_json(*r.triple);
  if (r.verdict != DecompositionReport::Verdict::OK) {
    out["stage"] = r.stage;
    out["reason"] = r.reason;
    if (r.witness) out["witness"] = to_json(*r.witness);
    if (!r.detail.empty()) {
      Json detail = Json::object();
      for (const auto& [k, v] : r.detail) detail[k] = v;
      out["detail"] = std::move(detail);
    }
  }

  const auto& t = r.trace;
  Json trace = Json::object();
  if (t.sigma_k) trace["sigma_K"] = to_json(*t.sigma_k);
  if (t.rho) trace["rho"] = to_json(*t.rho);
  if (t.tau6) trace["tau6"] = to_json(*t.tau6);
  if (!t.t.empty()) {
    Json tv = Json::array();
    for (const auto& x : t.t) tv.push_back(x.str());
    trace["T"] = std::move(tv);
  }
  if (t.beta) trace["beta"] = t.beta->str();
  auto table = [](const SampleTable& s) {
    Json o = Json::object();
    for (const auto& [x, y] : s) o[x.str()] = y.str();
    return o;
  };
  if (!t.nu_samples.empty()) trace["nu"] = table(t.nu_samples);
  if (!t.xi_eta_samples.empty()) {
    Json o = Json::object();
    for (const auto& [x, xe] : t.xi_eta_samples) o[x.str()] = Json::array({xe.first.str(), xe.second.str()});
    trace["xi_eta"] = std::move(o);
  }
  if (!t.c_samples.empty()) trace["c"] = table(t.c_samples);
  if (!t.gamma_samples.empty()) trace["gamma"] = table(t.gamma_samples);
  out["trace"] = std::move(trace);

  Json residuals = Json::array();
  for (const auto& res : r.residuals) {
    Json e{{"word", to_json(res.word)}, {"equal", res.equal}};
    if (!res.equal) {
      e["lhs"] = to_json(res.lhs);
      e["rhs"] = to_json(res.rhs);
    }
    residuals.push_back(std::move(e));
  }
  out["residuals"] = std::move(residuals);
  out["queries"] = r.query_count;
  return out;
}

}  // namespace posmat
