#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fictus/errors.hpp"
#include "fictus/pools.hpp"
#include "fictus/universe.hpp"

namespace fictus {

// Attribute predicates are article-visible and cost one reasoning step,
// like any other sentence a reader can see.
inline const std::vector<std::pair<std::string, std::string>>& attribute_predicates() {
    static const std::vector<std::pair<std::string, std::string>> preds = {
        {"dob", "date of birth"},
        {"occupation", "occupation"},
        {"hobby", "hobby"},
        {"gender", "gender"},
    };
    return preds;
}

inline bool is_attribute_pred(const std::string& p) {
    for (const auto& [pred, _] : attribute_predicates())
        if (pred == p) return true;
    return false;
}

inline std::optional<std::string> attribute_surface(const std::string& pred) {
    for (const auto& [p, s] : attribute_predicates())
        if (p == pred) return s;
    return std::nullopt;
}

inline std::optional<std::string> attribute_pred_from_surface(const std::string& surface) {
    for (const auto& [p, s] : attribute_predicates())
        if (s == surface) return p;
    return std::nullopt;
}

struct relation_def {
    std::string name;
    std::string plural;
    std::optional<gender_t> gender;      // gender of the target, if fixed
    std::vector<std::string> body;       // chain of predicates; empty = atomic
};

// The relation vocabulary: article-visible atomic relations plus derived
// relations defined as chains over them.  Loaded from a data file so the
// vocabulary can be extended without touching code.
class relation_registry {
public:
    static const std::vector<std::string>& atomic_names() {
        static const std::vector<std::string> names = {
            "mother", "father", "parent", "brother", "sister", "sibling",
            "son",    "daughter", "child", "wife",   "husband", "friend",
        };
        return names;
    }

    static relation_registry load(const std::string& path) {
        relation_registry reg;
        int line_no = 0;
        for (const auto& raw : read_lines(path)) {
            ++line_no;
            std::string line = raw;
            if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
            line = trim(line);
            if (line.empty()) continue;
            reg.add_line(line, line_no);
        }
        if (reg.defs_.empty()) throw error(errc::parse_error, "relation registry is empty");
        return reg;
    }

    static relation_registry load_default() {
        if (const char* env = std::getenv("FICTUS_RELATIONS"))
            return load(env);
        return load(data_pools::data_dir() + "/relations.txt");
    }

    bool contains(const std::string& name) const { return index_.count(name) > 0; }

    const relation_def& get(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) throw error(errc::unknown_relation, name);
        return defs_[it->second];
    }

    // Flattens a relation to its article-visible chain; the chain length
    // is the relation's reasoning-step count.
    std::vector<std::string> expand(const std::string& name) const {
        const relation_def& def = get(name);
        if (def.body.empty()) return {name};
        std::vector<std::string> out;
        for (const auto& pred : def.body) {
            auto sub = expand(pred);
            out.insert(out.end(), sub.begin(), sub.end());
        }
        return out;
    }

    int step_count(const std::string& name) const {
        return static_cast<int>(expand(name).size());
    }

    bool is_atomic(const std::string& name) const { return get(name).body.empty(); }

    const std::vector<relation_def>& all() const { return defs_; }

    // relation names in file order (deterministic sampling order)
    std::vector<std::string> names() const {
        std::vector<std::string> out;
        out.reserve(defs_.size());
        for (const auto& d : defs_) out.push_back(d.name);
        return out;
    }

private:
    static std::string trim(const std::string& s) {
        size_t b = s.find_first_not_of(" \t");
        if (b == std::string::npos) return "";
        size_t e = s.find_last_not_of(" \t");
        return s.substr(b, e - b + 1);
    }

    void add_line(const std::string& line, int line_no) {
        auto bad = [&](const std::string& msg) {
            throw error(errc::parse_error,
                        "relations file line " + std::to_string(line_no) + ": " + msg);
        };
        std::vector<std::string> cols;
        size_t start = 0;
        while (true) {
            size_t bar = line.find('|', start);
            cols.push_back(trim(line.substr(start, bar - start)));
            if (bar == std::string::npos) break;
            start = bar + 1;
        }
        if (cols.size() != 4) bad("expected 'name | plural | gender | definition'");
        relation_def def;
        def.name = cols[0];
        def.plural = cols[1];
        if (cols[2] == "female")
            def.gender = gender_t::female;
        else if (cols[2] == "male")
            def.gender = gender_t::male;
        else if (cols[2] != "any")
            bad("gender must be female, male, or any");
        if (def.name.empty() || def.plural.empty()) bad("name and plural must be non-empty");
        if (index_.count(def.name)) bad("duplicate relation " + def.name);

        if (cols[3] == "atomic") {
            bool known = false;
            for (const auto& a : atomic_names()) known |= (a == def.name);
            if (!known) bad("unknown atomic relation " + def.name);
        } else {
            def.body = parse_chain(cols[3], line_no);
            for (const auto& pred : def.body)
                if (!index_.count(pred)) bad("body uses relation not defined above: " + pred);
        }
        index_[def.name] = defs_.size();
        defs_.push_back(def);
    }

    // "p1(X, A), p2(A, B), p3(B, Y)" -> {p1, p2, p3}, verifying the chain
    std::vector<std::string> parse_chain(const std::string& text, int line_no) const {
        auto bad = [&](const std::string& msg) {
            throw error(errc::parse_error,
                        "relations file line " + std::to_string(line_no) + ": " + msg);
        };
        std::vector<std::string> preds;
        std::vector<std::pair<std::string, std::string>> vars;
        size_t pos = 0;
        while (pos < text.size()) {
            while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
            if (pos >= text.size()) break;
            size_t open = text.find('(', pos);
            size_t comma = text.find(',', open);
            size_t close = text.find(')', open);
            if (open == std::string::npos || comma == std::string::npos ||
                close == std::string::npos || comma > close)
                bad("malformed atom in definition");
            preds.push_back(trim(text.substr(pos, open - pos)));
            vars.emplace_back(trim(text.substr(open + 1, comma - open - 1)),
                              trim(text.substr(comma + 1, close - comma - 1)));
            pos = close + 1;
        }
        if (preds.empty()) bad("empty definition");
        if (vars.front().first != "X") bad("chain must start at X");
        if (vars.back().second != "Y") bad("chain must end at Y");
        for (size_t i = 0; i + 1 < vars.size(); ++i)
            if (vars[i].second != vars[i + 1].first) bad("chain variables do not connect");
        return preds;
    }

    std::vector<relation_def> defs_;
    std::map<std::string, size_t> index_;
};

}  // namespace fictus
