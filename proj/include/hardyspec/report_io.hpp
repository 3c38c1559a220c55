/**
 * Deterministic serialization of analysis results. All floating point fields
 * are printed with a fixed %.12g format and no run-dependent data (no
 * timestamps, no host info), so re-running a job reproduces the output files
 * byte for byte. Files are written atomically: content lands in a sibling
 * temporary and is renamed into place.
 */
#pragma once

#include <string>

#include "hardyspec/algebra.hpp"

namespace hardyspec {

void atomic_write_text(const std::string& path, const std::string& content);

std::string format_double(double v);

std::string csv_essential_spectrum(const SpectrumReport& rep);
std::string csv_spectrum(const SpectrumReport& rep);
std::string csv_index(Complex lambda, int index, double distance,
                      double margin);
std::string csv_verdict(Complex lambda, const InvertibilityVerdict& v);
std::string csv_homotopy(const HomotopyTrace& trace);

// scatter plot of the essential samples plus component representatives
std::string svg_spectrum(const SpectrumReport& rep);

}  // namespace hardyspec
