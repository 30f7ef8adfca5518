#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "scg/element.hpp"
#include "scg/harish_chandra.hpp"
#include "scg/linalg.hpp"
#include "scg/omega.hpp"
#include "scg/oscillator.hpp"
#include "scg/report.hpp"
#include "scg/scasimir.hpp"

namespace scg {

using Json = nlohmann::json;

// JSON. Every rational is a "p/q" string ("p" when integral).
Json to_json(const Rational& q);
Json to_json(const Element& x);
Json to_json(const WeylElement& x);
Json to_json(const OmegaElement& w);
Json to_json(const CoeffTable& t);
Json to_json(const CartanPolynomial& p);
Json to_json(const Matrix& m);
Json to_json(const Report& r);
Json to_json(const HighestWeightVector& v);

Rational rational_from_json(const Json& j);
Element element_from_json(const Json& j);
OmegaElement omega_from_json(const Json& j);
CoeffTable coeff_table_from_json(const Json& j);
CartanPolynomial cartan_from_json(const Json& j);

// Plain text.
std::string to_text(const OmegaElement& w);
std::string to_text(const CoeffTable& t);
std::string to_text(const Report& r);
std::string to_text(const WeylElement& x);

// LaTeX fragments (math mode bodies) and a standalone document wrapper.
std::string to_latex(const Rational& q);
std::string to_latex(const Element& x);
std::string to_latex(const OmegaElement& w);
std::string to_latex(const CoeffTable& t);
std::string to_latex(const CartanPolynomial& p);
std::string to_latex(const Report& r);
std::string latex_document(const std::vector<std::string>& equations);
std::string latex_text_document(const std::vector<std::string>& paragraphs);

}  // namespace scg
