#include "virgame/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "virgame/error.hpp"

namespace virgame::report {

namespace {

Ordering order_of(double a, double b) {
  if (a > b) return Ordering::FirstHigher;
  if (b > a) return Ordering::SecondHigher;
  return Ordering::Equal;
}

std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct Series {
  const char* label;
  const char* color;
  double ScoreSet::*field;
};

constexpr std::array<Series, 4> kSeries = {{
    {"SPS", "#1f77b4", &ScoreSet::sps},
    {"S", "#d62728", &ScoreSet::severity},
    {"DP", "#2ca02c", &ScoreSet::disinfection_probability},
    {"DC", "#ff7f0e", &ScoreSet::disinfection_payoff},
}};

}  // namespace

std::string format_number(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) return "nan";
  return std::string(buf, end);
}

Comparison compare_profiles(const TraitProfile& first, const TraitProfile& second) {
  Comparison c;
  c.first = score_all(first);
  c.second = score_all(second);
  for (std::size_t k = 0; k < kSeries.size(); ++k) {
    c.order[k] = order_of(c.first.*kSeries[k].field, c.second.*kSeries[k].field);
  }
  return c;
}

void SweepSpec::validate() const {
  const std::string name(1, variable_letter(fixed));
  if (!(fixed_value >= 0.0 && fixed_value <= 100.0)) {
    throw DomainError(name, "fixed value for " + name + " is outside [0, 100]");
  }
  if (fixed == Variable::G && !(fixed_value > 0.0)) {
    throw PreconditionError("G must be > 0 when held fixed");
  }
  if (step < 1) throw ParameterError("sweep step must be >= 1");
  if (from < 0 || to > 100 || from > to) {
    throw ParameterError("sweep range must satisfy 0 <= from <= to <= 100");
  }
}

std::size_t SweepSpec::length() const { return static_cast<std::size_t>((to - from) / step + 1); }

TraitProfile sweep_profile(const SweepSpec& spec, int t) {
  TraitProfile p;
  for (Variable v : kAllVariables) p.set(v, static_cast<double>(t));
  p.set(spec.fixed, spec.fixed_value);
  if (spec.fixed != Variable::G) p.g = std::max(p.g, 1.0);
  return p;
}

SweepResult sweep(const SweepSpec& spec) {
  spec.validate();
  SweepResult out;
  out.spec = spec;
  out.rows.reserve(spec.length());
  for (int t = spec.from; t <= spec.to; t += spec.step) {
    out.rows.push_back({t, score_all(sweep_profile(spec, t))});
  }
  return out;
}

std::string render_csv(const SweepResult& result) {
  if (result.rows.empty()) throw InputError("cannot render an empty sweep");
  std::string out = "t,SPS,S,DP,DC\n";
  for (const auto& r : result.rows) {
    out += std::to_string(r.t);
    for (const auto& s : kSeries) {
      out += ',';
      out += format_number(r.scores.*s.field);
    }
    out += '\n';
  }
  return out;
}

std::string render_svg(const SweepResult& result) {
  if (result.rows.empty()) throw InputError("cannot render an empty sweep");

  constexpr double kWidth = 800, kHeight = 600;
  constexpr double kLeft = 70, kRight = 640, kTop = 50, kBottom = 530;

  const double t0 = result.rows.front().t;
  const double t1 = result.rows.back().t;
  auto x_of = [&](double t) {
    if (t1 == t0) return (kLeft + kRight) / 2;
    return kLeft + (t - t0) / (t1 - t0) * (kRight - kLeft);
  };
  auto y_of = [&](double v) { return kBottom - v / 100.0 * (kBottom - kTop); };

  const std::string fixed_name(1, variable_letter(result.spec.fixed));
  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" fill=\"white\"/>\n"
      << "<text x=\"" << fixed2((kLeft + kRight) / 2) << "\" y=\"28\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"16\">Scores with " << fixed_name << " = "
      << format_number(result.spec.fixed_value) << "</text>\n";

  // axes and grid
  svg << "<g stroke=\"#000\" stroke-width=\"1\">\n"
      << "<line x1=\"" << kLeft << "\" y1=\"" << kBottom << "\" x2=\"" << kRight << "\" y2=\""
      << kBottom << "\"/>\n"
      << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
      << kBottom << "\"/>\n"
      << "</g>\n";
  svg << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  for (int v = 0; v <= 100; v += 20) {
    const std::string y = fixed2(y_of(v));
    svg << "<line x1=\"" << kLeft << "\" y1=\"" << y << "\" x2=\"" << kRight << "\" y2=\"" << y
        << "\" stroke=\"#ddd\"/>\n"
        << "<text x=\"" << kLeft - 8 << "\" y=\"" << y << "\" text-anchor=\"end\" "
        << "dominant-baseline=\"middle\">" << v << "</text>\n";
  }
  for (int k = 0; k <= 5; ++k) {
    const double t = t0 + (t1 - t0) * k / 5.0;
    svg << "<text x=\"" << fixed2(x_of(t)) << "\" y=\"" << kBottom + 18
        << "\" text-anchor=\"middle\">" << format_number(t) << "</text>\n";
  }
  svg << "<text x=\"" << fixed2((kLeft + kRight) / 2) << "\" y=\"" << kBottom + 45
      << "\" text-anchor=\"middle\">t (all other variables)</text>\n"
      << "<text x=\"20\" y=\"" << fixed2((kTop + kBottom) / 2)
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 " << fixed2((kTop + kBottom) / 2)
      << ")\">score (0-100)</text>\n"
      << "</g>\n";

  for (const auto& s : kSeries) {
    svg << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"2\" points=\"";
    bool first = true;
    for (const auto& r : result.rows) {
      if (!first) svg << ' ';
      first = false;
      svg << fixed2(x_of(r.t)) << ',' << fixed2(y_of(r.scores.*s.field));
    }
    svg << "\"><title>" << s.label << "</title></polyline>\n";
  }

  // legend
  svg << "<g font-family=\"sans-serif\" font-size=\"13\">\n";
  double ly = kTop + 10;
  for (const auto& s : kSeries) {
    svg << "<line x1=\"660\" y1=\"" << ly << "\" x2=\"690\" y2=\"" << ly << "\" stroke=\""
        << s.color << "\" stroke-width=\"3\"/>\n"
        << "<text x=\"698\" y=\"" << ly << "\" dominant-baseline=\"middle\">" << s.label
        << "</text>\n";
    ly += 24;
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace virgame::report
