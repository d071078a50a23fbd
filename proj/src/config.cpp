#include "parcert/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "parcert/errors.hpp"

namespace parcert {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace

Config Config::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_string(ss.str());
}

Config Config::from_string(const std::string& text) {
    Config cfg;
    std::stringstream ss(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw InvalidSpec("config line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty()) throw InvalidSpec("config line " + std::to_string(lineno) + ": empty key");
        cfg.kv_[key] = val;
    }
    return cfg;
}

std::optional<std::string> Config::get(const std::string& key) const {
    auto it = kv_.find(key);
    if (it == kv_.end()) return std::nullopt;
    return it->second;
}

std::string Config::get_string(const std::string& key, const std::string& dflt) const {
    auto v = get(key);
    return v ? *v : dflt;
}

unsigned long Config::get_uint(const std::string& key, unsigned long dflt) const {
    auto v = get(key);
    if (!v) return dflt;
    try {
        return std::stoul(*v);
    } catch (const std::exception&) {
        throw InvalidSpec("config key '" + key + "': bad unsigned integer '" + *v + "'");
    }
}

Rational Config::get_rational(const std::string& key, const Rational& dflt) const {
    auto v = get(key);
    return v ? parse_exact_number(*v) : dflt;
}

Rational parse_exact_number(const std::string& text) {
    std::string s = text;
    if (s.empty()) throw InvalidSpec("empty numeric constant");
    if (s.find('/') != std::string::npos) {
        Rational q;
        if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
            throw InvalidSpec("bad rational constant: '" + text + "'");
        if (q.get_den() == 0) throw InvalidSpec("zero denominator in '" + text + "'");
        q.canonicalize();
        return q;
    }
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        i = 1;
    }
    std::string digits;
    std::size_t frac_digits = 0;
    bool seen_dot = false;
    for (; i < s.size(); ++i) {
        if (s[i] == '.') {
            if (seen_dot) throw InvalidSpec("bad decimal constant: '" + text + "'");
            seen_dot = true;
        } else if (s[i] >= '0' && s[i] <= '9') {
            digits += s[i];
            if (seen_dot) ++frac_digits;
        } else {
            throw InvalidSpec("bad decimal constant: '" + text + "'");
        }
    }
    if (digits.empty()) throw InvalidSpec("bad decimal constant: '" + text + "'");
    mpz_class num(digits, 10);
    mpz_class den = 1;
    for (std::size_t k = 0; k < frac_digits; ++k)
        den *= 10;
    Rational q(num, den);
    q.canonicalize();
    if (neg) q = -q;
    return q;
}

} // namespace parcert
