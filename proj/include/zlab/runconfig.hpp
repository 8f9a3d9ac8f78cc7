#pragma once

#include "zlab/errors.hpp"
#include "zlab/meanvalue.hpp"
#include "zlab/ratpoly.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace zlab {

// Flat key-value parameter file with exact rational values. One key per
// line, arrays in brackets, '#' comments:
//
//   section2.theta = 4/7
//   section2.R     = 1.023
//   section2.P1    = [-0.064, 0.112]
//
// Polynomial arrays hold constrained-basis coefficients, not raw monomial
// coefficients. Values written by to_text() reload bit-identically.
class RunConfig {
public:
    struct Value {
        bool is_array = false;
        std::vector<Rat> items;

        bool operator==(const Value&) const = default;
    };

    static RunConfig parse(const std::string& text)
    {
        RunConfig cfg;
        std::istringstream in(text);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (size_t hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            const size_t lo = line.find_first_not_of(" \t\r");
            if (lo == std::string::npos) continue;
            const size_t eq = line.find('=');
            if (eq == std::string::npos)
                throw InvalidConfig(where(lineno) + "expected 'key = value'");
            std::string key = strip(line.substr(0, eq));
            std::string val = strip(line.substr(eq + 1));
            if (key.empty()) throw InvalidConfig(where(lineno) + "empty key");
            if (cfg.values_.count(key))
                throw InvalidConfig(where(lineno) + "duplicate key '" + key + "'");
            cfg.values_[key] = parse_value(val, lineno, key);
        }
        return cfg;
    }

    static RunConfig load(const std::string& path)
    {
        std::ifstream in(path);
        if (!in) throw InvalidConfig("cannot open config file '" + path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse(buf.str());
    }

    // Built-in default: the reference parameters.
    static RunConfig reference()
    {
        RunConfig c;
        c.set_scalar("section2.theta", Rat(4, 7));
        c.set_scalar("section2.R", Rat(1023, 1000));
        c.set_array("section2.P1", {Rat(-64, 1000), Rat(112, 1000)});
        c.set_array("section2.P2", {Rat(1305, 1000), Rat(-276, 1000), Rat(-25, 1000)});
        c.set_scalar("section3.theta", Rat(4, 7));
        c.set_scalar("section3.R", Rat(1104, 1000));
        c.set_scalar("section3.delta", Rat(869, 1000));
        c.set_array("section3.P", {Rat(-274, 1000), Rat(-334, 1000), Rat(5, 1000)});
        c.set_array("section3.Q", {Rat(-609, 1000), Rat(-572, 1000), Rat(-4895, 1000)});
        return c;
    }

    bool has(const std::string& key) const { return values_.count(key) != 0; }

    Rat scalar(const std::string& key) const
    {
        const Value& v = get(key);
        if (v.is_array) throw InvalidConfig("key '" + key + "' is an array, expected scalar");
        return v.items.at(0);
    }

    const std::vector<Rat>& array(const std::string& key) const
    {
        const Value& v = get(key);
        if (!v.is_array) throw InvalidConfig("key '" + key + "' is a scalar, expected array");
        return v.items;
    }

    void set_scalar(const std::string& key, Rat v) { values_[key] = Value{false, {std::move(v)}}; }
    void set_array(const std::string& key, std::vector<Rat> v)
    {
        values_[key] = Value{true, std::move(v)};
    }

    MollifierPair section2_pair() const
    {
        MollifierPair m;
        m.theta = scalar("section2.theta");
        m.R = scalar("section2.R");
        m.P1 = p_basis(PBasis::section2_p1, array("section2.P1"));
        m.P2 = p_basis(PBasis::section2_p2, array("section2.P2"));
        return m;
    }

    EtaSpec section3_eta() const
    {
        EtaSpec e;
        e.theta = scalar("section3.theta");
        e.R = scalar("section3.R");
        e.delta = scalar("section3.delta");
        e.P = p_basis(PBasis::section3_p, array("section3.P"));
        e.Q = q_basis(array("section3.Q"));
        return e;
    }

    std::string to_text() const
    {
        std::ostringstream out;
        for (const auto& [key, v] : values_) {
            out << key << " = ";
            if (v.is_array) {
                out << "[";
                for (size_t i = 0; i < v.items.size(); ++i)
                    out << (i ? ", " : "") << rat_to_string(v.items[i]);
                out << "]";
            } else {
                out << rat_to_string(v.items[0]);
            }
            out << "\n";
        }
        return out.str();
    }

    void save(const std::string& path) const
    {
        std::ofstream out(path);
        if (!out) throw InvalidConfig("cannot write config file '" + path + "'");
        out << to_text();
    }

    bool operator==(const RunConfig&) const = default;

private:
    static std::string strip(const std::string& s)
    {
        const size_t lo = s.find_first_not_of(" \t\r");
        if (lo == std::string::npos) return "";
        const size_t hi = s.find_last_not_of(" \t\r");
        return s.substr(lo, hi - lo + 1);
    }

    static std::string where(int lineno) { return "line " + std::to_string(lineno) + ": "; }

    static Value parse_value(const std::string& val, int lineno, const std::string& key)
    {
        Value v;
        if (val.empty()) throw InvalidConfig(where(lineno) + "empty value for '" + key + "'");
        try {
            if (val.front() == '[') {
                if (val.back() != ']')
                    throw InvalidConfig(where(lineno) + "unterminated array for '" + key + "'");
                v.is_array = true;
                const std::string body = strip(val.substr(1, val.size() - 2));
                size_t pos = 0;
                while (!body.empty()) {
                    const size_t comma = body.find(',', pos);
                    const std::string item = strip(comma == std::string::npos
                                                       ? body.substr(pos)
                                                       : body.substr(pos, comma - pos));
                    if (item.empty())
                        throw InvalidConfig(where(lineno) + "empty array element in '" + key + "'");
                    v.items.push_back(rat_from_string(item));
                    if (comma == std::string::npos) break;
                    pos = comma + 1;
                }
            } else {
                v.items.push_back(rat_from_string(val));
            }
        } catch (const std::invalid_argument& e) {
            throw InvalidConfig(where(lineno) + "field '" + key + "': " + e.what());
        }
        return v;
    }

    const Value& get(const std::string& key) const
    {
        auto it = values_.find(key);
        if (it == values_.end()) throw InvalidConfig("missing config key '" + key + "'");
        return it->second;
    }

    std::map<std::string, Value> values_;
};

} // namespace zlab
