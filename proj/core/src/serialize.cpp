#include <nonsin/serialize.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace nonsin {

namespace {

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string array_json(const std::vector<double>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += g17(v[i]);
  }
  out += "]";
  return out;
}

std::vector<double> array_from(const nlohmann::json& j) {
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(v.get<double>());
  return out;
}

std::string generator_json(const Generator& g, bool even) {
  std::string out = "{";
  out += "\"spec\": ";
  if (g.fn) {
    out += nlohmann::json(g.fn->to_spec_text()).dump();
  } else {
    out += "null";
  }
  out += ", \"g0\": " + g17(g.mean);
  out += ", \"L\": " + g17(g.spec.L);
  out += ", \"coeffs\": " + array_json(even ? g.spec.a : g.spec.b);
  out += "}";
  return out;
}

Generator generator_from(const nlohmann::json& j, bool even) {
  Generator g;
  g.mean = j.at("g0").get<double>();
  g.spec.L = j.at("L").get<double>();
  std::vector<double> coeffs = array_from(j.at("coeffs"));
  if (even) {
    g.spec.a = coeffs;
    g.spec.b.assign(coeffs.size(), 0.0);
    g.spec.f0 = g.mean;
  } else {
    g.spec.b = coeffs;
    g.spec.a.assign(coeffs.size(), 0.0);
    g.spec.f0 = 0.0;
  }
  if (j.contains("spec") && !j.at("spec").is_null()) {
    g.fn = PiecewiseFunction::from_text(j.at("spec").get<std::string>());
  }
  return g;
}

}  // namespace

std::string to_json(const SinSpectrum& s) {
  std::string out = "{\n";
  out += "  \"L\": " + g17(s.L) + ",\n";
  out += "  \"f0\": " + g17(s.f0) + ",\n";
  out += "  \"a\": " + array_json(s.a) + ",\n";
  out += "  \"b\": " + array_json(s.b) + "\n";
  out += "}\n";
  return out;
}

SinSpectrum sin_spectrum_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  SinSpectrum s;
  s.L = j.at("L").get<double>();
  s.f0 = j.at("f0").get<double>();
  s.a = array_from(j.at("a"));
  s.b = array_from(j.at("b"));
  return s;
}

std::string to_json(const NonSinSpectrum& s) {
  std::string out = "{\n";
  out += "  \"f0\": " + g17(s.f0) + ",\n";
  out += "  \"A\": " + array_json(s.A) + ",\n";
  out += "  \"B\": " + array_json(s.B) + ",\n";
  out += "  \"basis\": {\n";
  out += "    \"L\": " + g17(s.basis.half_period()) + ",\n";
  out += "    \"g0\": " + g17(s.basis.has_even() ? s.basis.even().mean : 0.0) + ",\n";
  out += "    \"even\": ";
  if (s.basis.has_even() && s.basis.even().fn) {
    out += nlohmann::json(s.basis.even().fn->to_spec_text()).dump();
  } else {
    out += "null";
  }
  out += ",\n    \"odd\": ";
  if (s.basis.has_odd() && s.basis.odd().fn) {
    out += nlohmann::json(s.basis.odd().fn->to_spec_text()).dump();
  } else {
    out += "null";
  }
  out += ",\n    \"even_coeffs\": ";
  out += s.basis.has_even() ? array_json(s.basis.even().spec.a) : "[]";
  out += ",\n    \"odd_coeffs\": ";
  out += s.basis.has_odd() ? array_json(s.basis.odd().spec.b) : "[]";
  out += "\n  }\n}\n";
  return out;
}

NonSinSpectrum nonsin_spectrum_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  NonSinSpectrum s;
  s.f0 = j.at("f0").get<double>();
  s.A = array_from(j.at("A"));
  s.B = array_from(j.at("B"));

  const nlohmann::json& jb = j.at("basis");
  double L = jb.at("L").get<double>();
  std::optional<Generator> even_gen;
  std::optional<Generator> odd_gen;
  std::vector<double> ec = array_from(jb.at("even_coeffs"));
  std::vector<double> oc = array_from(jb.at("odd_coeffs"));
  if (!ec.empty()) {
    Generator g;
    g.mean = jb.at("g0").get<double>();
    g.spec.L = L;
    g.spec.f0 = g.mean;
    g.spec.a = ec;
    g.spec.b.assign(ec.size(), 0.0);
    if (!jb.at("even").is_null()) {
      g.fn = PiecewiseFunction::from_text(jb.at("even").get<std::string>());
    }
    even_gen = std::move(g);
  }
  if (!oc.empty()) {
    Generator h;
    h.spec.L = L;
    h.spec.b = oc;
    h.spec.a.assign(oc.size(), 0.0);
    if (!jb.at("odd").is_null()) {
      h.fn = PiecewiseFunction::from_text(jb.at("odd").get<std::string>());
    }
    odd_gen = std::move(h);
  }
  s.basis = GeneratorBasis::from_generators(std::move(even_gen), std::move(odd_gen), L);
  return s;
}

std::string to_json(const OrthoBasis& basis) {
  std::string out = "{\n";
  out += "  \"parity\": ";
  out += basis.parity == Parity::Even ? "\"even\"" : "\"odd\"";
  out += ",\n  \"N\": " + std::to_string(basis.N) + ",\n";
  // Row-major lower triangle including the unit diagonal.
  std::vector<double> tri;
  tri.reserve(static_cast<std::size_t>(basis.N) * (basis.N + 1) / 2);
  for (int i = 1; i <= basis.N; ++i) {
    for (int j = 1; j <= i; ++j) tri.push_back(basis.mix_at(i, j));
  }
  out += "  \"mix\": " + array_json(tri) + ",\n";
  out += "  \"norms_sq\": " + array_json(basis.norms_sq) + ",\n";
  out += "  \"interval\": [" + g17(basis.lo) + ", " + g17(basis.hi) + "],\n";
  out += "  \"generator\": " +
         generator_json(basis.generator, basis.parity == Parity::Even) + "\n";
  out += "}\n";
  return out;
}

OrthoBasis ortho_basis_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  OrthoBasis basis;
  std::string parity = j.at("parity").get<std::string>();
  if (parity == "even") {
    basis.parity = Parity::Even;
  } else if (parity == "odd") {
    basis.parity = Parity::Odd;
  } else {
    throw PreconditionError("parity must be 'even' or 'odd'");
  }
  basis.N = j.at("N").get<int>();
  std::vector<double> tri = array_from(j.at("mix"));
  if (tri.size() != static_cast<std::size_t>(basis.N) * (basis.N + 1) / 2) {
    throw PreconditionError("mix triangle has the wrong length");
  }
  basis.mix.assign(static_cast<std::size_t>(basis.N) * basis.N, 0.0);
  std::size_t pos = 0;
  for (int i = 1; i <= basis.N; ++i) {
    for (int j2 = 1; j2 <= i; ++j2) {
      basis.mix[static_cast<std::size_t>(i - 1) * basis.N + (j2 - 1)] = tri[pos++];
    }
  }
  basis.norms_sq = array_from(j.at("norms_sq"));
  basis.lo = j.at("interval")[0].get<double>();
  basis.hi = j.at("interval")[1].get<double>();
  basis.generator = generator_from(j.at("generator"), basis.parity == Parity::Even);
  return basis;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path dir = target.parent_path();
  fs::path tmp = (dir.empty() ? fs::path(".") : dir) / (target.filename().string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw NumericError("cannot open " + tmp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw NumericError("short write to " + tmp.string());
  }
  fs::rename(tmp, target);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

BasisFile parse_basis_file(const std::string& content) {
  std::istringstream in(content);
  std::string line;
  std::string parity;
  std::string spec;
  while (std::getline(in, line)) {
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') {
      std::size_t key = line.find("parity:", start);
      if (key != std::string::npos) {
        std::size_t v = line.find_first_not_of(" \t", key + 7);
        if (v != std::string::npos) {
          std::size_t end = line.find_last_not_of(" \t\r");
          parity = line.substr(v, end - v + 1);
        }
      }
      continue;
    }
    spec = line.substr(start);
    break;
  }
  if (spec.empty()) throw PreconditionError("basis file holds no function spec");
  return BasisFile{parity, PiecewiseFunction::from_text(spec)};
}

}  // namespace nonsin
