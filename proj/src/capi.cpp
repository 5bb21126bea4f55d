#include "qsuper.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include <json.hpp>

#include "qsuper/deform.hpp"
#include "qsuper/json_io.hpp"
#include "qsuper/pairing.hpp"

using namespace qsuper;

struct qsuper_engine {
  ParityDatum datum;
  FMode fmode;
  UMode umode;
  std::optional<TwistData> twist;
  FunctionAlgebra falg;
  EnvelopingAlgebra ualg;
  std::string last_error;

  qsuper_engine(ParityDatum d, FMode fm, std::optional<TwistData> tw)
      : datum(d),
        fmode(fm),
        umode(fm == FMode::Multiparam ? UMode::Twisted : UMode::Standard),
        twist(std::move(tw)),
        falg(d, fm),
        ualg(d) {}
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int fail(qsuper_engine* eng, int code, const std::string& msg) {
  if (eng) eng->last_error = msg;
  return code;
}

// Wraps a computation returning a string; parse errors and invalid arguments
// are mapped to their codes.
template <class Fn>
int run(qsuper_engine* eng, char** out, Fn&& fn) {
  if (!eng || !out) return QSUPER_ERR_INVALID;
  *out = nullptr;
  eng->last_error.clear();
  try {
    std::string s = fn();
    *out = dup_string(s);
    return *out ? QSUPER_OK : QSUPER_ERR_INTERNAL;
  } catch (const std::invalid_argument& e) {
    return fail(eng, QSUPER_ERR_PARSE, e.what());
  } catch (const std::out_of_range& e) {
    return fail(eng, QSUPER_ERR_PARSE, e.what());
  } catch (const std::exception& e) {
    return fail(eng, QSUPER_ERR_INTERNAL, e.what());
  }
}

std::vector<std::vector<Rational>> parse_phi_matrix(int n, const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw std::invalid_argument("phi must be a JSON n x n array");
  std::vector<std::vector<Rational>> phi(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != n)
      throw std::invalid_argument("phi must be a JSON n x n array");
    for (int k = 0; k < n; ++k) {
      const auto& cell = j[i][k];
      if (cell.is_number_integer())
        phi[i][k] = Rational(cell.get<long>());
      else if (cell.is_string())
        phi[i][k] = rat_parse(cell.get<std::string>());
      else
        throw std::invalid_argument("phi entries must be integers or rational strings");
    }
  }
  // upper triangle is authoritative
  for (int i = 0; i < n; ++i) {
    if (phi[i][i] != 0) throw std::invalid_argument("phi diagonal must be zero");
    for (int k = i + 1; k < n; ++k) phi[k][i] = -phi[i][k];
  }
  return phi;
}

std::string element_out(const FElement& e, bool as_json) {
  return as_json ? f_element_to_json(e) : to_string(e);
}

}  // namespace

extern "C" {

int qsuper_engine_new(int n, const char* parity, const char* mode, const char* phi,
                      qsuper_engine** out) {
  if (!out) return QSUPER_ERR_INVALID;
  *out = nullptr;
  try {
    if (!parity || !mode) throw std::invalid_argument("parity and mode are required");
    ParityDatum datum = ParityDatum::from_bits(n, parity);
    std::string m = mode;
    FMode fmode;
    if (m == "uni")
      fmode = FMode::Uniparam;
    else if (m == "multi")
      fmode = FMode::Multiparam;
    else
      throw std::invalid_argument("mode must be 'uni' or 'multi'");
    std::optional<TwistData> twist;
    if (fmode == FMode::Multiparam) {
      if (!phi || std::string(phi) == "symbolic")
        twist = TwistData::symbolic(datum);
      else
        twist = TwistData::numeric(datum, parse_phi_matrix(n, phi));
    }
    *out = new qsuper_engine(std::move(datum), fmode, std::move(twist));
    return QSUPER_OK;
  } catch (const std::exception&) {
    return QSUPER_ERR_INVALID;
  }
}

void qsuper_engine_free(qsuper_engine* eng) { delete eng; }

const char* qsuper_last_error(const qsuper_engine* eng) {
  return eng ? eng->last_error.c_str() : "";
}

const char* qsuper_version(void) { return "1.0.0"; }

void qsuper_string_free(char* s) { std::free(s); }

int qsuper_basis(qsuper_engine* eng, int degree, char** out_json) {
  return run(eng, out_json, [&] {
    if (degree < 0) throw std::invalid_argument("degree must be >= 0");
    return basis_to_json(eng->falg.pbw_basis(degree), eng->datum.n());
  });
}

int qsuper_normal_form(qsuper_engine* eng, const char* element, int as_json, char** out) {
  return run(eng, out, [&] {
    FElement e = f_element_parse(element ? element : "", eng->datum);
    return element_out(eng->falg.normal_form(e), as_json);
  });
}

int qsuper_multiply(qsuper_engine* eng, const char* a, const char* b, int as_json,
                    char** out) {
  return run(eng, out, [&] {
    FElement ea = f_element_parse(a ? a : "", eng->datum);
    FElement eb = f_element_parse(b ? b : "", eng->datum);
    return element_out(eng->falg.multiply(ea, eb), as_json);
  });
}

int qsuper_coproduct(qsuper_engine* eng, const char* element, int as_json, char** out) {
  return run(eng, out, [&] {
    FElement e = f_element_parse(element ? element : "", eng->datum);
    FTensor t = eng->falg.coproduct(e);
    return as_json ? f_tensor_to_json(t) : to_string(t);
  });
}

int qsuper_pair(qsuper_engine* eng, const char* f, const char* u, int as_json,
                char** out) {
  return run(eng, out, [&] {
    FElement fe = f_element_parse(f ? f : "", eng->datum);
    UElement ue = u_element_parse(u ? u : "", eng->datum);
    Pairing ctx(eng->datum, eng->umode, eng->twist);
    LaurentCoefficient v = ctx.pair(fe, ue);
    return as_json ? coeff_to_json(v) : v.to_string();
  });
}

int qsuper_poisson(qsuper_engine* eng, const char* a, const char* b, int as_json,
                   char** out) {
  return run(eng, out, [&] {
    FElement ea = f_element_parse(a ? a : "", eng->datum);
    FElement eb = f_element_parse(b ? b : "", eng->datum);
    std::map<std::pair<int, int>, Rational> phi;
    if (eng->fmode == FMode::Multiparam) {
      if (!eng->twist || eng->twist->is_symbolic())
        throw std::invalid_argument("poisson bracket needs a numeric phi matrix");
      phi = eng->twist->assignment();
    }
    return element_out(eng->falg.poisson_bracket(ea, eb, phi), as_json);
  });
}

int qsuper_deformed_multiply(qsuper_engine* eng, const char* a, const char* b,
                             int as_json, char** out) {
  return run(eng, out, [&] {
    FunctionAlgebra uni(eng->datum, FMode::Uniparam);
    FElement ea = uni.normal_form(f_element_parse(a ? a : "", eng->datum));
    FElement eb = uni.normal_form(f_element_parse(b ? b : "", eng->datum));
    return element_out(f_deformed_multiply(uni, ea, eb), as_json);
  });
}

int qsuper_matrix_rep(qsuper_engine* eng, const char* u, char** out_json) {
  return run(eng, out_json, [&] {
    UElement ue = u_element_parse(u ? u : "", eng->datum);
    return matrix_to_json(eng->ualg.matrix_rep(ue));
  });
}

}  // extern "C"

namespace {

Report rep_kills_ideal_report(qsuper_engine* eng) {
  Report rep;
  rep.suite = "rep-kills-ideal";
  rep.n = eng->datum.n();
  rep.parity = eng->datum.bits();
  rep.mode = "standard";
  for (IdealForm form : {IdealForm::FormalGamma, IdealForm::Polynomial}) {
    for (const auto& g : eng->ualg.ideal_generators(form)) {
      auto m = eng->ualg.matrix_rep(g.element);
      bool zero = true;
      for (const auto& row : m)
        for (const auto& c : row)
          if (!c.is_zero()) zero = false;
      rep.record(zero, g.family, "zero matrix", matrix_to_json(m));
    }
  }
  return rep;
}

Report pairing_rank_report(qsuper_engine* eng, int degree) {
  Report rep;
  rep.suite = "pairing-rank";
  rep.n = eng->datum.n();
  rep.parity = eng->datum.bits();
  rep.mode = eng->umode == UMode::Twisted ? "twisted" : "standard";
  FunctionAlgebra uni(eng->datum, FMode::Uniparam);
  long expected = static_cast<long>(uni.pbw_basis_upto(degree).size());
  std::optional<TwistData> twist = eng->twist;
  if (twist && twist->is_symbolic()) {
    // rank is certified under a numeric specialisation; pick distinct integers
    std::vector<std::vector<Rational>> phi(
        eng->datum.n(), std::vector<Rational>(eng->datum.n(), Rational(0)));
    long v = 1;
    for (int t = 0; t < eng->datum.n(); ++t)
      for (int l = t + 1; l < eng->datum.n(); ++l, ++v) {
        phi[t][l] = Rational(v);
        phi[l][t] = Rational(-v);
      }
    twist = TwistData::numeric(eng->datum, phi);
  }
  int rank = pairing_matrix_rank(eng->datum, degree, degree, eng->umode, twist);
  rep.record(rank == expected, "rank at degree <= " + std::to_string(degree),
             std::to_string(expected), std::to_string(rank));
  return rep;
}

}  // namespace

extern "C" int qsuper_verify(qsuper_engine* eng, const char* suite, int depth, int degree,
                             char** out_json) {
  if (!eng || !out_json || !suite) return QSUPER_ERR_INVALID;
  *out_json = nullptr;
  eng->last_error.clear();
  try {
    std::string s = suite;
    int D = depth > 0 ? depth : 3;
    int m = degree > 0 ? degree : 2;
    std::vector<Report> reports;
    bool all = s == "all";
    if (all || s == "r-orth")
      reports.push_back(verify_R_orthogonal(eng->datum, IdealForm::FormalGamma, D,
                                            eng->umode, eng->twist));
    if (all || s == "j-orth")
      reports.push_back(verify_J_orthogonal(eng->datum, eng->umode, D, eng->twist));
    if (all || s == "j-coideal") reports.push_back(verify_J_coideal(eng->falg));
    if (all || s == "skew") reports.push_back(skew_primitivity_check(eng->datum));
    if (all || s == "mp-relations")
      reports.push_back(verify_multiparam_presentation(eng->datum));
    if (all || s == "cocycle") reports.push_back(cocycle_identity_check(eng->datum, D));
    if (all || s == "rep-kills-ideal") reports.push_back(rep_kills_ideal_report(eng));
    if (all || s == "pairing-rank") reports.push_back(pairing_rank_report(eng, m));
    if (reports.empty()) return fail(eng, QSUPER_ERR_INVALID, "unknown suite: " + s);
    *out_json = dup_string(reports_to_json(reports));
    if (!*out_json) return QSUPER_ERR_INTERNAL;
    for (const auto& r : reports)
      if (!r.passed()) return QSUPER_ERR_VERIFY;
    return QSUPER_OK;
  } catch (const std::invalid_argument& e) {
    return fail(eng, QSUPER_ERR_PARSE, e.what());
  } catch (const std::exception& e) {
    return fail(eng, QSUPER_ERR_INTERNAL, e.what());
  }
}
