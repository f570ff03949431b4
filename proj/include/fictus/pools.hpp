#pragma once

#include <cstdlib>
#include <fstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "fictus/errors.hpp"

#ifndef FICTUS_DEFAULT_DATA_DIR
#define FICTUS_DEFAULT_DATA_DIR "data"
#endif

namespace fictus {

inline std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::io_failure, "cannot open " + path);
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) out.push_back(line);
    }
    return out;
}

// Bundled word lists.  The default directory is baked in at build time;
// FICTUS_DATA_DIR overrides it, and each file can be replaced
// individually through FICTUS_FIRST_NAMES_FEMALE etc.
struct data_pools {
    std::vector<std::string> female_first;
    std::vector<std::string> male_first;
    std::vector<std::string> surnames;
    std::vector<std::string> occupations;
    std::vector<std::string> hobbies;

    static std::string data_dir() {
        if (const char* env = std::getenv("FICTUS_DATA_DIR")) return env;
        return FICTUS_DEFAULT_DATA_DIR;
    }

    static std::string file_path(const char* env_key, const char* fname) {
        if (const char* env = std::getenv(env_key)) return env;
        return data_dir() + "/" + fname;
    }

    static data_pools load() {
        data_pools p;
        p.female_first = read_lines(file_path("FICTUS_FIRST_NAMES_FEMALE", "first_names_female.txt"));
        p.male_first = read_lines(file_path("FICTUS_FIRST_NAMES_MALE", "first_names_male.txt"));
        p.surnames = read_lines(file_path("FICTUS_SURNAMES", "surnames.txt"));
        p.occupations = read_lines(file_path("FICTUS_OCCUPATIONS", "occupations.txt"));
        p.hobbies = read_lines(file_path("FICTUS_HOBBIES", "hobbies.txt"));
        p.check();
        return p;
    }

    void check() const {
        auto no_dups = [](const std::vector<std::string>& v, const char* what) {
            std::unordered_set<std::string> seen;
            for (const auto& s : v) {
                if (s.find(',') != std::string::npos)
                    throw error(errc::io_failure, std::string(what) + " entry contains a comma: " + s);
                if (!seen.insert(s).second)
                    throw error(errc::io_failure, std::string(what) + " has duplicate entry: " + s);
            }
        };
        no_dups(female_first, "female first names");
        no_dups(male_first, "male first names");
        no_dups(surnames, "surnames");
        no_dups(occupations, "occupations");
        no_dups(hobbies, "hobbies");
        if (female_first.empty() || male_first.empty() || surnames.empty() ||
            occupations.empty() || hobbies.empty())
            throw error(errc::io_failure, "a data pool is empty");
    }
};

}  // namespace fictus
