#pragma once

#include <iosfwd>
#include <string>

#include "lpemb/disintegration.hpp"
#include "lpemb/dyadic.hpp"
#include "lpemb/stable.hpp"
#include "lpemb/tree.hpp"

namespace lpemb {

// Structured text records (JSON).  Scalar values round-trip bit for bit.

std::string to_record(const DyadicStep& f);
std::string to_record(const DyadicStepC& f);
ScalarField record_field(const std::string& record);
DyadicStep dyadic_real_from_record(const std::string& record);
DyadicStepC dyadic_complex_from_record(const std::string& record);

std::string to_record(const FiniteTree& tree);
FiniteTree tree_from_record(const std::string& record);

std::string to_record(const Disintegration<DyadicStep>& d);
Disintegration<DyadicStep> disintegration_from_record(const std::string& record);

std::string to_record(const TreeIso& iso);
TreeIso tree_iso_from_record(const std::string& record);

/// Binary sample export: one JSON metadata line, then raw little-endian
/// 64-bit floats (pairs re,im for the complex case).
void write_samples_binary(std::ostream& out, const SampleVector& sv);
void write_samples_binary(std::ostream& out, const SampleVectorC& sv);
SampleVector read_samples_binary_real(std::istream& in);
SampleVectorC read_samples_binary_complex(std::istream& in);

std::string samples_to_csv(const SampleVector& sv);
std::string samples_to_csv(const SampleVectorC& sv);

}  // namespace lpemb
