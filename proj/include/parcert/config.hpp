#ifndef PARCERT_CONFIG_HPP
#define PARCERT_CONFIG_HPP

#include <map>
#include <optional>
#include <string>

#include "parcert/bigcount.hpp"

namespace parcert {

// Declarative key-value config: one `key = value` per line, `#` comments.
// Numeric constants are decimal strings ("0.231516813449") or exact
// rationals ("1/2"); both parse to exact mpq values.
class Config {
  public:
    Config() = default;
    static Config from_file(const std::string& path);
    static Config from_string(const std::string& text);

    bool has(const std::string& key) const { return kv_.count(key) > 0; }
    std::optional<std::string> get(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& dflt) const;
    unsigned long get_uint(const std::string& key, unsigned long dflt) const;
    Rational get_rational(const std::string& key, const Rational& dflt) const;

    const std::map<std::string, std::string>& entries() const { return kv_; }

  private:
    std::map<std::string, std::string> kv_;
};

// "p/q" or a plain decimal such as "-2.00944566088" -> exact rational.
Rational parse_exact_number(const std::string& text);

} // namespace parcert

#endif
