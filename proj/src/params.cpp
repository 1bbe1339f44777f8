#include "leroy/params.hpp"

#include "leroy/errors.hpp"

namespace leroy {

Params::Params(Decimal alpha, Decimal beta, Decimal gamma)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), gamma_(std::move(gamma)) {
  if (alpha_.sign() <= 0) throw Error(ErrorKind::invalid_argument, "alpha must be positive");
  if (beta_.sign() <= 0) throw Error(ErrorKind::invalid_argument, "beta must be positive");
  if (gamma_.sign() <= 0) throw Error(ErrorKind::invalid_argument, "gamma must be positive");
}

Params Params::parse(std::string_view alpha, std::string_view beta, std::string_view gamma) {
  return Params(Decimal::parse(alpha), Decimal::parse(beta), Decimal::parse(gamma));
}

std::string Params::describe() const {
  return "alpha=" + alpha_.to_string() + " beta=" + beta_.to_string() + " gamma=" + gamma_.to_string();
}

std::string to_string(Method m) {
  switch (m) {
    case Method::series: return "series";
    case Method::contour: return "contour";
    case Method::asymptotic: return "asymptotic";
    case Method::fox_wright: return "fox_wright";
  }
  return "unknown";
}

}  // namespace leroy
