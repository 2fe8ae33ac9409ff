#include "rbs/density.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "rbs/errors.hpp"

namespace rbs {

DensitySpec DensitySpec::power(double p) {
  DensitySpec d;
  d.family = Family::power;
  d.exponent = p;
  d.validate();
  return d;
}

DensitySpec DensitySpec::polynomial(std::vector<double> coeffs) {
  DensitySpec d;
  d.family = Family::polynomial;
  d.coeffs = std::move(coeffs);
  d.validate();
  return d;
}

DensitySpec DensitySpec::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("DensitySpec: expected \"power:P\" or "
                                "\"poly:c0,c1,...\", got \"" + text + "\"");
  const std::string kind = text.substr(0, colon);
  const std::string body = text.substr(colon + 1);
  try {
    if (kind == "power") {
      size_t pos = 0;
      const double p = std::stod(body, &pos);
      if (pos != body.size()) throw std::invalid_argument("trailing text");
      return power(p);
    }
    if (kind == "poly") {
      std::vector<double> c;
      std::istringstream in(body);
      std::string tok;
      while (std::getline(in, tok, ',')) {
        size_t pos = 0;
        c.push_back(std::stod(tok, &pos));
        if (pos != tok.size()) throw std::invalid_argument("trailing text");
      }
      if (c.empty()) throw std::invalid_argument("no coefficients");
      return polynomial(std::move(c));
    }
  } catch (const InvalidDensityError&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("DensitySpec: cannot parse \"" + text + "\"");
  }
  throw std::invalid_argument("DensitySpec: unknown family \"" + kind + "\"");
}

std::string DensitySpec::to_string() const {
  std::ostringstream os;
  if (family == Family::power) {
    os << "power:" << exponent;
  } else {
    os << "poly:";
    for (size_t i = 0; i < coeffs.size(); ++i) {
      if (i) os << ",";
      os << coeffs[i];
    }
  }
  return os.str();
}

void DensitySpec::validate() const {
  if (family == Family::power) {
    if (!(exponent > -1.0))
      throw InvalidDensityError("DensitySpec: power exponent must be > -1");
    return;
  }
  if (coeffs.empty())
    throw InvalidDensityError("DensitySpec: empty polynomial");
  double integral = 0.0;
  for (size_t i = 0; i < coeffs.size(); ++i)
    integral += coeffs[i] / static_cast<double>(i + 1);
  if (std::abs(integral - 1.0) > 1e-9)
    throw InvalidDensityError(
        "DensitySpec: polynomial integrates to " + std::to_string(integral) +
        ", not 1");
  for (int k = 0; k <= 1024; ++k) {
    const double s = static_cast<double>(k) / 1024.0;
    if (pdf(s) < -1e-12)
      throw InvalidDensityError("DensitySpec: polynomial negative at s = " +
                                std::to_string(s));
  }
}

double DensitySpec::pdf(double s) const {
  if (family == Family::power)
    return (exponent + 1.0) * std::pow(s, exponent);
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = acc * s + *it;
  return acc;
}

double DensitySpec::sample(SeededGenerator& gen) const {
  if (family == Family::power)
    return std::pow(gen.uniform01(), 1.0 / (exponent + 1.0));
  double envelope = 0.0;
  for (double c : coeffs) envelope += std::abs(c);
  for (long attempt = 0; attempt < 1000000; ++attempt) {
    const double s = gen.uniform01();
    const double u = gen.uniform01() * envelope;
    if (u <= pdf(s)) return s;
  }
  throw std::runtime_error("DensitySpec: rejection sampling stalled");
}

}  // namespace rbs
