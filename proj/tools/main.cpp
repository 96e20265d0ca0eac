// Command-line front end: expands 2L-periodic functions over dilated
// generator bases, converts between sinusoidal and non-sinusoidal
// spectra, orthogonalizes harmonic families, and emits JSON/CSV/SVG.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <nonsin/analysis.hpp>
#include <nonsin/convert.hpp>
#include <nonsin/ortho.hpp>
#include <nonsin/quasisin.hpp>
#include <nonsin/serialize.hpp>

namespace {

using namespace nonsin;

constexpr int kExitParse = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitPrecondition = 4;

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// `-f` style arguments accept either literal DSL text or @path.
std::string load_source(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') return read_file(arg.substr(1));
  return arg;
}

PiecewiseFunction load_function(const std::string& arg) {
  std::string text = load_source(arg);
  if (!arg.empty() && arg.front() == '@') {
    return parse_basis_file(text).fn;
  }
  return PiecewiseFunction::from_text(text);
}

// Loads a basis file and verifies its parity against the computed
// spectrum; the '# parity:' hint is advisory, the spectrum decides.
PiecewiseFunction load_basis_file(const std::string& path, bool expect_even, int N) {
  BasisFile bf = parse_basis_file(read_file(path));
  if (!bf.parity_hint.empty()) {
    bool hint_even = bf.parity_hint == "even";
    if (hint_even != expect_even) {
      throw PreconditionError(path + ": parity hint '" + bf.parity_hint +
                              "' does not match its use as " +
                              (expect_even ? "an even" : "an odd") + " generator");
    }
  }
  SinSpectrum s = compute_spectrum(bf.fn, std::min(N, 16));
  double scale = 0.0;
  for (double v : s.a) scale = std::max(scale, std::abs(v));
  for (double v : s.b) scale = std::max(scale, std::abs(v));
  double tol = 1e-8 * std::max(1.0, scale);
  if (expect_even) {
    for (double v : s.b) {
      if (std::abs(v) > tol) {
        throw PreconditionError(path + ": not an even generator (sine content found)");
      }
    }
  } else {
    if (std::abs(s.f0) > tol) {
      throw PreconditionError(path + ": not an odd generator (nonzero mean)");
    }
    for (double v : s.a) {
      if (std::abs(v) > tol) {
        throw PreconditionError(path + ": not an odd generator (cosine content found)");
      }
    }
  }
  return bf.fn;
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    write_file_atomic(out_path, content);
  }
}

GeneratorBasis load_generator_basis(const std::string& even_path, const std::string& odd_path,
                                    int N) {
  std::optional<PiecewiseFunction> even_fn;
  std::optional<PiecewiseFunction> odd_fn;
  if (!even_path.empty()) even_fn = load_basis_file(even_path, true, N);
  if (!odd_path.empty()) odd_fn = load_basis_file(odd_path, false, N);
  if (!even_fn && !odd_fn) {
    throw PreconditionError("give --even-basis and/or --odd-basis");
  }
  return GeneratorBasis::from_piecewise(std::move(even_fn), std::move(odd_fn), N);
}

std::vector<int> doubling_orders(int N) {
  std::vector<int> orders;
  for (int n = 1; n < N; n *= 2) orders.push_back(n);
  orders.push_back(N);
  return orders;
}

int run(int argc, char** argv) {
  CLI::App app{"non-sinusoidal periodic series toolkit"};
  app.require_subcommand(1);

  std::string function_arg;
  std::string even_basis;
  std::string odd_basis;
  std::string kernel_arg;
  std::string bases_arg;
  std::string spectrum_path;
  std::string out_path;
  std::string format;
  std::string kind = "sine";
  int N = 64;
  int grid = 4096;
  bool smooth_flag = false;
  bool series_harmonics = false;
  double rescale_to = 0.0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("-N,--order", N, "truncation order");
    cmd->add_option("-o,--output", out_path, "output file (stdout when absent)");
    cmd->add_option("--format", format, "output format override (json|csv|svg)");
  };

  CLI::App* coeffs = app.add_subcommand("coeffs", "sinusoidal spectrum of a function");
  coeffs->add_option("-f,--function", function_arg, "piecewise spec or @file")->required();
  add_common(coeffs);

  CLI::App* expand = app.add_subcommand("expand", "expansion over a generator basis");
  expand->add_option("-f,--function", function_arg, "piecewise spec or @file")->required();
  expand->add_option("--even-basis", even_basis, "even generator file");
  expand->add_option("--odd-basis", odd_basis, "odd generator file");
  add_common(expand);

  CLI::App* invert = app.add_subcommand(
      "invert", "expansion of the generator over the function's own family");
  invert->add_option("-f,--function", function_arg, "piecewise spec or @file")->required();
  invert->add_option("--even-basis", even_basis, "even generator file");
  invert->add_option("--odd-basis", odd_basis, "odd generator file");
  add_common(invert);

  CLI::App* ortho = app.add_subcommand("ortho", "Gram-Schmidt orthogonalization");
  ortho->add_option("--even-basis", even_basis, "even generator file");
  ortho->add_option("--odd-basis", odd_basis, "odd generator file");
  add_common(ortho);

  CLI::App* eval = app.add_subcommand("eval", "partial sums of a stored expansion");
  eval->add_option("--spectrum", spectrum_path, "expansion JSON file")->required();
  eval->add_option("--grid", grid, "number of sample points");
  auto* exact_opt =
      eval->add_flag("--exact-harmonics", "evaluate harmonics on the generator waveform");
  eval->add_flag("--series-harmonics", series_harmonics,
                 "evaluate harmonics by truncated series")
      ->excludes(exact_opt);
  add_common(eval);

  CLI::App* compare = app.add_subcommand("compare", "error table across bases");
  compare->add_option("-f,--function", function_arg, "piecewise spec or @file")->required();
  compare->add_option("--bases", bases_arg, "comma-separated even-generator files")->required();
  compare->add_option("--grid", grid, "number of sample points");
  add_common(compare);

  CLI::App* quasisin = app.add_subcommand("quasisin", "assemble a quasi-sinusoid");
  quasisin->add_option("--kernel", kernel_arg, "kernel spec on [0, L/2] or @file")->required();
  quasisin->add_option("--kind", kind, "sine|cosine")
      ->check(CLI::IsMember({"sine", "cosine"}));
  quasisin->add_flag("--smooth", smooth_flag, "apply pulse/ramp smoothing");
  quasisin->add_option("--rescale", rescale_to, "re-parametrize to this half-period");
  add_common(quasisin);

  CLI::App* plot = app.add_subcommand("plot", "SVG of a function and optional partial sum");
  plot->add_option("-f,--function", function_arg, "piecewise spec or @file")->required();
  plot->add_option("--spectrum", spectrum_path, "expansion JSON file");
  plot->add_option("--grid", grid, "number of sample points");
  add_common(plot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  // --format only confirms the subcommand's native format; there is one
  // serialization per subcommand by design.
  auto check_format = [&](const char* native) {
    if (!format.empty() && format != native) {
      throw PreconditionError(std::string("this subcommand emits ") + native +
                              ", not " + format);
    }
  };

  try {
    if (coeffs->parsed()) {
      check_format("json");
      PiecewiseFunction f = load_function(function_arg);
      emit(out_path, to_json(compute_spectrum(f, N)));
    } else if (expand->parsed()) {
      check_format("json");
      PiecewiseFunction f = load_function(function_arg);
      GeneratorBasis basis = load_generator_basis(even_basis, odd_basis, N);
      emit(out_path, to_json(expand_general(f, basis, N)));
    } else if (invert->parsed()) {
      check_format("json");
      // The function's parity components become the expansion family; the
      // named generator is the function being expanded over it.
      PiecewiseFunction f = load_function(function_arg);
      ParitySplit split = f.parity_split();
      NonSinSpectrum out;
      if (!even_basis.empty()) {
        PiecewiseFunction gen = load_basis_file(even_basis, true, N);
        SinSpectrum family = compute_spectrum(split.even, N);
        GeneratorBasis target = GeneratorBasis::from_piecewise(gen, std::nullopt, N);
        out.A = invert_expansion(target, family, N, true);
        out.f0 = target.even().mean;
        out.basis = GeneratorBasis::from_piecewise(split.even, std::nullopt, N);
      } else if (!odd_basis.empty()) {
        PiecewiseFunction gen = load_basis_file(odd_basis, false, N);
        SinSpectrum family = compute_spectrum(split.odd, N);
        GeneratorBasis target = GeneratorBasis::from_piecewise(std::nullopt, gen, N);
        out.B = invert_expansion(target, family, N, false);
        out.basis = GeneratorBasis::from_piecewise(std::nullopt, split.odd, N);
      } else {
        throw PreconditionError("give --even-basis or --odd-basis");
      }
      emit(out_path, to_json(out));
    } else if (ortho->parsed()) {
      check_format("json");
      if (even_basis.empty() == odd_basis.empty()) {
        throw PreconditionError("give exactly one of --even-basis/--odd-basis");
      }
      bool even_side = !even_basis.empty();
      PiecewiseFunction fn =
          load_basis_file(even_side ? even_basis : odd_basis, even_side, N);
      Generator gen;
      gen.spec = compute_spectrum(fn, std::max(N, 64));
      gen.mean = even_side ? gen.spec.f0 : 0.0;
      gen.fn = std::move(fn);
      emit(out_path,
           to_json(gram_schmidt(gen, even_side ? Parity::Even : Parity::Odd, N)));
    } else if (eval->parsed()) {
      check_format("csv");
      NonSinSpectrum s = nonsin_spectrum_from_json(read_file(spectrum_path));
      int stored = static_cast<int>(std::max(s.A.size(), s.B.size()));
      int order = std::min(N, stored);
      double L = s.basis.half_period();
      HarmonicMode mode = series_harmonics ? HarmonicMode::Series : HarmonicMode::Exact;
      std::string csv = "x,value\n";
      for (int i = 0; i < grid; ++i) {
        double x = -L + (i + 0.5) * (2.0 * L / grid);
        csv += g17(x) + "," + g17(eval_partial_sum(s, order, x, mode)) + "\n";
      }
      emit(out_path, csv);
    } else if (compare->parsed()) {
      check_format("csv");
      PiecewiseFunction f = load_function(function_arg);
      std::vector<NamedBasis> bases;
      std::size_t start = 0;
      while (start <= bases_arg.size() && !bases_arg.empty()) {
        std::size_t comma = bases_arg.find(',', start);
        std::string path = bases_arg.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!path.empty()) {
          bases.push_back({path, GeneratorBasis::from_piecewise(
                                     load_basis_file(path, true, N), std::nullopt, N)});
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      emit(out_path, reports_to_csv(compare_bases(f, bases, doubling_orders(N), grid)));
    } else if (quasisin->parsed()) {
      check_format("fn");
      Kernel k = Kernel::from_text(load_source(kernel_arg));
      QuasiSinusoid q = kind == "sine" ? make_sine_like(k) : make_cosine_like(k);
      if (smooth_flag) q = smooth(q);
      if (rescale_to > 0.0) q = rescale(q, rescale_to);
      std::string text = "# parity: ";
      text += (q.kind == WaveKind::SineLike) ? "odd" : "even";
      text += "\n";
      for (const Correction& c : q.corrections) {
        text += "# correction: ";
        switch (c.type) {
          case Correction::Type::Pulse: text += "pulse "; break;
          case Correction::Type::Ramp: text += "ramp "; break;
          case Correction::Type::Residual: text += "residual-jump "; break;
        }
        text += g17(c.value) + "\n";
      }
      text += q.body.to_spec_text() + "\n";
      emit(out_path, text);
    } else if (plot->parsed()) {
      check_format("svg");
      PiecewiseFunction f = load_function(function_arg);
      double L = f.half_period();
      PlotSeries target{"f", {}};
      for (int i = 0; i < grid; ++i) {
        double x = -L + (i + 0.5) * (2.0 * L / grid);
        target.points.emplace_back(x, f.eval_periodic(x));
      }
      std::vector<PlotSeries> series{target};
      if (!spectrum_path.empty()) {
        NonSinSpectrum s = nonsin_spectrum_from_json(read_file(spectrum_path));
        int stored = static_cast<int>(std::max(s.A.size(), s.B.size()));
        int order = std::min(N, stored);
        PlotSeries sum{"S_" + std::to_string(order), {}};
        for (int i = 0; i < grid; ++i) {
          double x = -L + (i + 0.5) * (2.0 * L / grid);
          sum.points.emplace_back(x, eval_partial_sum(s, order, x));
        }
        series.push_back(std::move(sum));
      }
      emit(out_path, render_svg(series));
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const DomainError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
