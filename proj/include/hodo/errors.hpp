#pragma once

#include <stdexcept>
#include <string>

namespace hodo {

// Base of all domain errors; `code` is the stable machine-readable name
// surfaced by the CLI reports.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& what = "division by zero")
      : Error("DivisionByZero", what) {}
};

struct ZeroPolynomial : Error {
  explicit ZeroPolynomial(const std::string& what = "zero polynomial")
      : Error("ZeroPolynomial", what) {}
};

struct NotGenericallySquare : Error {
  explicit NotGenericallySquare(const std::string& what)
      : Error("NotGenericallySquare", what) {}
};

struct UnknownName : Error {
  explicit UnknownName(const std::string& name)
      : Error("UnknownName", "unknown name: " + name) {}
};

struct RankDeficient : Error {
  explicit RankDeficient(const std::string& what)
      : Error("RankDeficient", what) {}
};

struct PoleOnCurve : Error {
  explicit PoleOnCurve(const std::string& what) : Error("PoleOnCurve", what) {}
};

struct PoleCollapse : Error {
  explicit PoleCollapse(const std::string& what)
      : Error("PoleCollapse", what) {}
};

struct DependentSpan : Error {
  explicit DependentSpan(const std::string& what = "span vectors are linearly dependent")
      : Error("DependentSpan", what) {}
};

struct NotPositiveDefinite : Error {
  explicit NotPositiveDefinite(const std::string& what = "matrix is not positive definite")
      : Error("NotPositiveDefinite", what) {}
};

struct NotConformal : Error {
  explicit NotConformal(const std::string& what)
      : Error("NotConformal", what) {}
};

struct HigherOrderPole : Error {
  explicit HigherOrderPole(const std::string& what)
      : Error("HigherOrderPole", what) {}
};

struct SingularSystem : Error {
  explicit SingularSystem(const std::string& what)
      : Error("SingularSystem", what) {}
};

struct SyntaxError : Error {
  SyntaxError(std::size_t position, const std::string& what)
      : Error("SyntaxError", what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

struct UndeclaredVariable : Error {
  explicit UndeclaredVariable(const std::string& name)
      : Error("UndeclaredVariable", "undeclared variable: " + name) {}
};

struct ImaginaryInRealContext : Error {
  ImaginaryInRealContext()
      : Error("ImaginaryInRealContext",
              "imaginary unit used in a real-coefficient context") {}
};

struct EmptyPlot : Error {
  explicit EmptyPlot(const std::string& what = "all samples were skipped")
      : Error("EmptyPlot", what) {}
};

}  // namespace hodo
