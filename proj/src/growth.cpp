#include "uas/growth.hpp"

#include "uas/classify.hpp"
#include "uas/config.hpp"
#include "uas/truncation.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace uas {

GammaSeries::GammaSeries(std::vector<Integer> gamma) : gamma_(std::move(gamma)) {
  for (const auto& g : gamma_) {
    if (g < 0) throw std::invalid_argument("gamma series: negative entry");
  }
  while (!gamma_.empty() && gamma_.back() == 0) gamma_.pop_back();
}

GammaSeries GammaSeries::parse(std::string_view text) {
  std::string body(text);
  body.erase(std::remove_if(body.begin(), body.end(), [](char c) { return c == ' '; }), body.end());
  if (body.size() < 2 || body.front() != '(' || body.back() != ')') {
    throw std::invalid_argument("gamma series: expected \"(g0,g1,...)\"");
  }
  body = body.substr(1, body.size() - 2);
  std::vector<Integer> gamma;
  std::stringstream in(body);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw std::invalid_argument("gamma series: empty entry");
    Integer z;
    if (z.set_str(item, 10) != 0) throw std::invalid_argument("gamma series: bad entry \"" + item + "\"");
    gamma.push_back(z);
  }
  return GammaSeries(std::move(gamma));
}

Integer GammaSeries::dims_at(int n) const {
  if (n < 0) throw std::invalid_argument("dims_at: negative arity");
  Integer total = 0;
  for (std::size_t k = 0; k < gamma_.size(); ++k) total += gamma_[k] * binomial(n, k);
  return total;
}

std::string GammaSeries::closed_form() const {
  if (gamma_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < gamma_.size(); ++k) {
    if (gamma_[k] == 0) continue;
    std::string num;
    if (k == 0) {
      num = to_string(gamma_[k]);
    } else {
      num = gamma_[k] == 1 ? "" : to_string(gamma_[k]);
      num += k == 1 ? "t" : "t^" + std::to_string(k);
    }
    std::string den = k == 0 ? "(1-t)" : "(1-t)^" + std::to_string(k + 1);
    if (!out.empty()) out += " + ";
    out += num + "/" + den;
  }
  return out;
}

std::string GammaSeries::str() const {
  std::string out = "(";
  for (std::size_t k = 0; k < gamma_.size(); ++k) {
    if (k) out += ",";
    out += to_string(gamma_[k]);
  }
  return out + ")";
}

int GammaSeries::gkdim() const { return static_cast<int>(gamma_.size()); }

int GammaSeries::grade() const {
  if (gamma_.empty()) throw std::invalid_argument("grade: zero series");
  return gkdim() - 1;
}

Rational GammaSeries::leading_lambda() const {
  if (gamma_.empty()) throw std::invalid_argument("leading_lambda: zero series");
  Rational l(gamma_.back(), factorial(grade()));
  l.canonicalize();
  return l;
}

std::strong_ordering operator<=>(const GammaSeries& a, const GammaSeries& b) {
  if (a.gamma_.size() != b.gamma_.size()) return a.gamma_.size() <=> b.gamma_.size();
  for (std::size_t k = 0; k < a.gamma_.size(); ++k) {
    int c = cmp(a.gamma_[k], b.gamma_[k]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

GammaSeries gamma_series_of_quotient(const IdealWindow& ideal) {
  if (!ideal.tail) throw std::invalid_argument("gamma_series_of_quotient: the ideal has no certified tail");
  const int tail = *ideal.tail;
  if (tail - 1 > ideal.window) throw WindowExceeded("gamma_series_of_quotient: tail beyond the window");
  std::vector<Integer> gamma;
  for (int k = 0; k < tail; ++k) {
    Integer full = k == 0 ? Integer(1) : uas::gamma(k);
    gamma.push_back(full - Integer(ideal.top(k).dim()));
  }
  return GammaSeries(std::move(gamma));
}

std::vector<GammaSeries> catalog(int grade) {
  if (grade < 0) return {};
  if (grade > 5) throw std::invalid_argument("catalog: grades above 5 are not supported");
  std::set<GammaSeries> found;
  for (const auto& s : series_of_gkdim(grade + 1)) found.insert(s);
  return {found.begin(), found.end()};
}

std::set<Rational> lambda_set(int grade) {
  std::set<Rational> out;
  for (const auto& s : catalog(grade)) out.insert(s.leading_lambda());
  return out;
}

std::string series_json(const GammaSeries& s) {
  nlohmann::ordered_json j;
  j["gamma"] = nlohmann::json::array();
  for (const auto& g : s.gamma()) j["gamma"].push_back(g.get_si());
  if (!s.is_zero()) {
    j["grade"] = s.grade();
    j["lambda"] = to_string(s.leading_lambda());
  }
  j["closed_form"] = s.closed_form();
  return j.dump();
}

std::string catalog_csv(const std::vector<GammaSeries>& series) {
  std::string out = "grade,gamma,lambda,closed_form\n";
  for (const auto& s : series) {
    out += std::to_string(s.grade()) + ",\"" + s.str() + "\"," + to_string(s.leading_lambda()) + ",\"" +
           s.closed_form() + "\"\n";
  }
  return out;
}

}  // namespace uas
