#include "hardyspec/report_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace hardyspec {

void atomic_write_text(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
    out.write(content.data(),
              static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("short write to " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot move " + tmp + " into place");
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

namespace {

void append_point_rows(std::string& out, const char* arc,
                       const std::vector<Complex>& pts) {
  for (std::size_t j = 0; j < pts.size(); ++j) {
    out += arc;
    out += ',';
    out += std::to_string(j);
    out += ',';
    out += format_double(pts[j].real());
    out += ',';
    out += format_double(pts[j].imag());
    out += '\n';
  }
}

}  // namespace

std::string csv_essential_spectrum(const SpectrumReport& rep) {
  std::string out;
  out += "# tail_bound," + format_double(rep.tail_bound) + "\n";
  out += "# max_gap," + format_double(rep.max_gap) + "\n";
  out += "arc,sample,re,im\n";
  append_point_rows(out, "whisker", rep.whisker_samples);
  append_point_rows(out, "circle", rep.circle_samples);
  return out;
}

std::string csv_spectrum(const SpectrumReport& rep) {
  std::string out = csv_essential_spectrum(rep);
  out += "# components\n";
  out += "component,re,im,index,in_spectrum,margin,cells,unbounded\n";
  for (std::size_t j = 0; j < rep.components.size(); ++j) {
    const auto& c = rep.components[j];
    out += std::to_string(j);
    out += ',';
    out += format_double(c.representative.real());
    out += ',';
    out += format_double(c.representative.imag());
    out += ',';
    out += std::to_string(c.index);
    out += ',';
    out += (c.index != 0 ? "1" : "0");
    out += ',';
    out += format_double(c.margin);
    out += ',';
    out += std::to_string(c.cell_count);
    out += ',';
    out += (c.touches_boundary ? "1" : "0");
    out += '\n';
  }
  return out;
}

std::string csv_index(Complex lambda, int index, double distance,
                      double margin) {
  std::string out = "lambda_re,lambda_im,index,essential_distance,margin\n";
  out += format_double(lambda.real()) + "," + format_double(lambda.imag()) +
         "," + std::to_string(index) + "," + format_double(distance) + "," +
         format_double(margin) + "\n";
  return out;
}

std::string csv_verdict(Complex lambda, const InvertibilityVerdict& v) {
  std::string out =
      "lambda_re,lambda_im,invertible,fredholm,index,essential_distance,"
      "margin\n";
  out += format_double(lambda.real()) + "," + format_double(lambda.imag()) +
         "," + (v.invertible ? "1" : "0") + "," + (v.fredholm ? "1" : "0") +
         "," + std::to_string(v.index) + "," +
         format_double(v.essential_distance) + "," + format_double(v.margin) +
         "\n";
  return out;
}

std::string csv_homotopy(const HomotopyTrace& trace) {
  std::string out = "w,essential_distance,index,contained\n";
  for (const auto& row : trace.rows) {
    out += format_double(row.w) + "," + format_double(row.essential_distance) +
           "," + std::to_string(row.index) + "," + (row.contained ? "1" : "0") +
           "\n";
  }
  out += "# index_constant," + std::string(trace.index_constant ? "1" : "0") +
         "\n";
  out += "# containment_ok," + std::string(trace.containment_ok ? "1" : "0") +
         "\n";
  return out;
}

std::string svg_spectrum(const SpectrumReport& rep) {
  double lo_re = 1e300, hi_re = -1e300, lo_im = 1e300, hi_im = -1e300;
  auto stretch = [&](const std::vector<Complex>& pts) {
    for (const auto& p : pts) {
      lo_re = std::min(lo_re, p.real());
      hi_re = std::max(hi_re, p.real());
      lo_im = std::min(lo_im, p.imag());
      hi_im = std::max(hi_im, p.imag());
    }
  };
  stretch(rep.whisker_samples);
  stretch(rep.circle_samples);
  for (const auto& c : rep.components) {
    lo_re = std::min(lo_re, c.representative.real());
    hi_re = std::max(hi_re, c.representative.real());
    lo_im = std::min(lo_im, c.representative.imag());
    hi_im = std::max(hi_im, c.representative.imag());
  }
  double span = std::max({hi_re - lo_re, hi_im - lo_im, 1e-6});
  double pad = 0.08 * span;
  lo_re -= pad;
  lo_im -= pad;
  span += 2.0 * pad;

  const double size = 800.0;
  auto px = [&](double v) { return (v - lo_re) / span * size; };
  // SVG y grows downward; flip the imaginary axis
  auto py = [&](double v) { return size - (v - lo_im) / span * size; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" "
         "height=\"800\" viewBox=\"0 0 800 800\">\n";
  out += "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
  auto dots = [&](const std::vector<Complex>& pts, const char* color) {
    for (const auto& p : pts) {
      out += "<circle cx=\"" + format_double(px(p.real())) + "\" cy=\"" +
             format_double(py(p.imag())) + "\" r=\"1.6\" fill=\"" + color +
             "\"/>\n";
    }
  };
  dots(rep.whisker_samples, "#1f77b4");
  dots(rep.circle_samples, "#d62728");
  for (const auto& c : rep.components) {
    const char* color = c.index != 0 ? "#2ca02c" : "#7f7f7f";
    out += "<rect x=\"" + format_double(px(c.representative.real()) - 4) +
           "\" y=\"" + format_double(py(c.representative.imag()) - 4) +
           "\" width=\"8\" height=\"8\" fill=\"" + color + "\"/>\n";
    out += "<text x=\"" + format_double(px(c.representative.real()) + 6) +
           "\" y=\"" + format_double(py(c.representative.imag()) + 4) +
           "\" font-size=\"14\" fill=\"" + color + "\">" +
           std::to_string(c.index) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace hardyspec
