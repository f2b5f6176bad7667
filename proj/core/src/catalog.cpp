#include "rephom/catalog.hpp"

#include <sstream>

#include "rephom/errors.hpp"

namespace rephom::model {

namespace {

std::vector<std::string> split_spec(const std::string& spec) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : spec) {
    if (c == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

int parse_param(const std::string& spec, const std::string& s) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InputError("bad parameter \"" + s + "\" in space spec " + spec);
  }
}

// Free Lie model on generators v_1..v_r of degree m*i - 1 with the quadratic
// differential dv_i = 1/2 sum_{j+k=i} [v_j, v_k]; covers the projective
// families (m = 2, 4, 8) and truncations of K(Z, even).
QuillenModel projective_quillen(const std::string& name, int m, int r) {
  QuillenModel q(name);
  for (int i = 1; i <= r; ++i)
    q.add_generator("v" + std::to_string(i), m * i - 1, i);
  for (int i = 2; i <= r; ++i) {
    LieExpr dv;
    for (int j = 1; j < i; ++j) {
      LieExpr term = LieExpr::bracket(LieExpr::generator(j - 1),
                                      LieExpr::generator(i - j - 1));
      term *= Rat(1, 2);
      dv += term;
    }
    q.set_differential(i - 1, std::move(dv));
  }
  return q;
}

QuillenModel single_generator_quillen(const std::string& name, int degree) {
  QuillenModel q(name);
  q.add_generator("u", degree, 1);
  return q;
}

// Sullivan model (Q[z] tensor Lambda[s], ds = z^{power}) with z of degree
// z_deg and weight 1, s of degree z_deg*power - 1 and weight `power`.
SullivanModel truncated_polynomial_sullivan(const std::string& name, int z_deg,
                                            int power) {
  SullivanModel s(name);
  const int z = s.add_generator("z", z_deg, {1, 0});
  const int sg = s.add_generator("s", z_deg * power - 1, {power, 0});
  gca::Element ds;
  ds.terms.emplace(gca::Monomial{{{z, power}}}, Rat(1));
  s.set_differential(sg, std::move(ds));
  return s;
}

SullivanModel free_one_generator_sullivan(const std::string& name,
                                          int degree) {
  SullivanModel s(name);
  s.add_generator("z", degree, {1, 0});
  return s;
}

}  // namespace

SpaceModels catalog(const std::string& spec, int degree_cap) {
  if (degree_cap < 1) throw InputError("degree cap must be >= 1");
  const auto parts = split_spec(spec);
  SpaceModels out;
  out.spec = spec;

  if (parts[0] == "sphere" && parts.size() == 2) {
    const int n = parse_param(spec, parts[1]);
    if (n < 2) throw InputError("sphere:n needs n >= 2");
    out.description = std::to_string(n) + "-sphere";
    out.quillen = single_generator_quillen(spec, n - 1);
    if (n % 2 == 1) {
      out.sullivan = free_one_generator_sullivan(spec, n);
    } else {
      out.sullivan = truncated_polynomial_sullivan(spec, n, 2);
    }
  } else if (parts[0] == "cp" && parts.size() == 2) {
    const int r = parse_param(spec, parts[1]);
    if (r < 1) throw InputError("cp:r needs r >= 1");
    out.description = "complex projective " + std::to_string(r) + "-space";
    out.quillen = projective_quillen(spec, 2, r);
    out.sullivan = truncated_polynomial_sullivan(spec, 2, r + 1);
  } else if (parts[0] == "hp" && parts.size() == 2) {
    const int r = parse_param(spec, parts[1]);
    if (r < 1) throw InputError("hp:r needs r >= 1");
    out.description = "quaternionic projective " + std::to_string(r) +
                      "-space";
    out.quillen = projective_quillen(spec, 4, r);
    out.sullivan = truncated_polynomial_sullivan(spec, 4, r + 1);
  } else if (parts[0] == "op2" && parts.size() == 1) {
    out.description = "octonionic projective plane";
    out.quillen = projective_quillen(spec, 8, 2);
    out.sullivan = truncated_polynomial_sullivan(spec, 8, 3);
  } else if (parts[0] == "kz" && parts.size() == 2) {
    const int d = parse_param(spec, parts[1]);
    if (d < 2) throw InputError("kz:d needs d >= 2");
    out.description = "Eilenberg-MacLane space K(Z," + std::to_string(d) + ")";
    if (d % 2 == 1) {
      out.quillen = single_generator_quillen(spec, d - 1);
      out.sullivan = free_one_generator_sullivan(spec, d);
    } else {
      // Generators of degree i*d - 1 <= degree_cap + 1 suffice: the missing
      // ones only touch chains in degrees above the cap.
      const int r = std::max(1, (degree_cap + 2) / d);
      out.quillen = projective_quillen(spec, d, r);
      out.quillen_validity = degree_cap;
      out.sullivan = free_one_generator_sullivan(spec, d);
    }
  } else if (parts[0] == "kzxs" && parts.size() == 3) {
    const int d = parse_param(spec, parts[1]);
    const int p = parse_param(spec, parts[2]);
    if (d < 2 || d % 2 != 0) throw InputError("kzxs:d:p needs even d >= 2");
    if (p < 3 || p % 2 != 1) throw InputError("kzxs:d:p needs odd p >= 3");
    out.description = "product K(Z," + std::to_string(d) + ") x S^" +
                      std::to_string(p);
    SullivanModel s(spec);
    s.add_generator("z", d, {1, 0});
    s.add_generator("s", p, {0, 1});
    out.sullivan = std::move(s);
  } else {
    throw InputError("unsupported space spec \"" + spec + "\"");
  }

  if (out.quillen) out.quillen->validate();
  if (out.sullivan) out.sullivan->validate();
  return out;
}

std::vector<int> reduced_homology_dims(const std::string& spec,
                                       int max_degree) {
  const auto parts = split_spec(spec);
  std::vector<int> dims(static_cast<std::size_t>(max_degree) + 1, 0);
  auto mark = [&dims, max_degree](int deg) {
    if (deg >= 1 && deg <= max_degree) ++dims[static_cast<std::size_t>(deg)];
  };

  if (parts[0] == "sphere" && parts.size() == 2) {
    mark(parse_param(spec, parts[1]));
  } else if ((parts[0] == "cp" || parts[0] == "hp") && parts.size() == 2) {
    const int m = parts[0] == "cp" ? 2 : 4;
    const int r = parse_param(spec, parts[1]);
    for (int i = 1; i <= r; ++i) mark(m * i);
  } else if (parts[0] == "op2" && parts.size() == 1) {
    mark(8);
    mark(16);
  } else if (parts[0] == "kz" && parts.size() == 2) {
    const int d = parse_param(spec, parts[1]);
    if (d % 2 == 1) {
      mark(d);
    } else {
      for (int i = 1; i * d <= max_degree; ++i) mark(i * d);
    }
  } else if (parts[0] == "kzxs" && parts.size() == 3) {
    const int d = parse_param(spec, parts[1]);
    const int p = parse_param(spec, parts[2]);
    for (int a = 0; a * d <= max_degree; ++a)
      for (int b = 0; b <= 1; ++b)
        if (a + b > 0) mark(a * d + b * p);
  } else {
    throw InputError("unsupported space spec \"" + spec + "\"");
  }
  return dims;
}

std::vector<std::pair<std::string, std::string>> catalog_families() {
  return {
      {"sphere:n", "n-sphere (n >= 2)"},
      {"cp:r", "complex projective r-space"},
      {"hp:r", "quaternionic projective r-space"},
      {"op2", "octonionic projective plane"},
      {"kz:d", "Eilenberg-MacLane space K(Z,d); truncated model for even d"},
      {"kzxs:d:p", "K(Z,d) x S^p for even d, odd p; Sullivan model only"},
  };
}

std::vector<std::string> catalog_samples() {
  return {"sphere:2", "sphere:3", "sphere:4", "sphere:7", "cp:2",
          "cp:3",     "hp:2",     "op2",      "kz:3",     "kz:4",
          "kzxs:2:3"};
}

}  // namespace rephom::model
