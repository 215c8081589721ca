#pragma once

#include <string>

#include "mixedop/celement.hpp"
#include "mixedop/dense.hpp"
#include "mixedop/factorization.hpp"
#include "mixedop/operator.hpp"
#include "mixedop/spectral.hpp"

namespace mixedop {

/// JSON document texts. Every document carries schema_version 1 and a kind
/// tag; complex numbers are [re, im] pairs; subset dims are 1-based. Readers
/// throw MalformedDocument for anything that does not validate, including
/// unparsable JSON. Writers are deterministic, so write(read(text)) == text
/// for texts the writers produced.

std::string operator_to_string(const MixedOperator& a);
MixedOperator operator_from_string(const std::string& text);

std::string function_to_string(const StaircaseFunction& u);
StaircaseFunction function_from_string(const std::string& text);

std::string celement_to_string(const CElement& f);
CElement celement_from_string(const std::string& text);

std::string factorization_to_string(const Factorization& f);
Factorization factorization_from_string(const std::string& text);

std::string matrix_to_string(const ComplexMatrix& m);
ComplexMatrix matrix_from_string(const std::string& text);

std::string spectrum_to_string(const SpectrumReport& r);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path); // MalformedDocument if unreadable

} // namespace mixedop
