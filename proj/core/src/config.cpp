#include <becscat/config.hpp>

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

#include <becscat/errors.hpp>

namespace becscat {

using json = nlohmann::ordered_json;

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t");
    const auto last = s.find_last_not_of(" \t");
    if (first == std::string::npos) return {};
    return s.substr(first, last - first + 1);
}

// Converts "NUMBER UNIT" by shifting the decimal exponent of the number
// token before the single string-to-double conversion, so "3.63e-3 cm"
// and "3.63e-5 m" produce bit-identical doubles.
double parse_suffixed(const std::string& text,
                      const std::map<std::string, int>& unit_shift,
                      const char* kind) {
    const char* begin = text.c_str();
    char* number_end = nullptr;
    errno = 0;
    (void)std::strtod(begin, &number_end);
    if (number_end == begin) {
        std::ostringstream msg;
        msg << "unit mismatch: " << kind << " '" << text << "' has no leading number";
        throw ConfigError(msg.str());
    }
    const std::string number(begin, number_end);
    const std::string unit = trim(std::string(number_end));

    const auto it = unit_shift.find(unit);
    if (it == unit_shift.end()) {
        std::ostringstream msg;
        msg << "unit mismatch: " << kind << " '" << text << "' needs one of:";
        for (const auto& [u, _] : unit_shift) msg << " " << u;
        throw ConfigError(msg.str());
    }

    std::string adjusted;
    const auto epos = number.find_first_of("eE");
    if (epos == std::string::npos) {
        adjusted = number + "e" + std::to_string(it->second);
    } else {
        const long exponent = std::strtol(number.c_str() + epos + 1, nullptr, 10);
        adjusted = number.substr(0, epos) + "e" + std::to_string(exponent + it->second);
    }
    char* adj_end = nullptr;
    const double value = std::strtod(adjusted.c_str(), &adj_end);
    if (adj_end == adjusted.c_str() || *adj_end != '\0' || !std::isfinite(value)) {
        std::ostringstream msg;
        msg << "unit mismatch: cannot parse " << kind << " '" << text << "'";
        throw ConfigError(msg.str());
    }
    return value;
}

const std::map<std::string, int> length_units{{"m", 0}, {"cm", -2}, {"um", -6}, {"nm", -9}};
const std::map<std::string, int> wavenumber_units{{"1/m", 0}, {"1/cm", 2}};

void reject_unknown_keys(const json& object, const std::vector<std::string>& allowed,
                         const char* where) {
    for (const auto& [key, _] : object.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            std::ostringstream msg;
            msg << "unknown key '" << key << "' in " << where << " (allowed:";
            for (const auto& k : allowed) msg << " " << k;
            msg << ")";
            throw ConfigError(msg.str());
        }
    }
}

const json& require_key(const json& doc, const char* key) {
    if (!doc.contains(key)) {
        std::ostringstream msg;
        msg << "missing required field '" << key << "'";
        throw ConfigError(msg.str());
    }
    return doc.at(key);
}

double require_number(const json& value, const char* key) {
    if (!value.is_number()) {
        std::ostringstream msg;
        msg << "field '" << key << "' must be a number";
        throw ConfigError(msg.str());
    }
    return value.get<double>();
}

std::string require_string(const json& value, const char* key) {
    if (!value.is_string()) {
        std::ostringstream msg;
        msg << "field '" << key << "' must be a string";
        throw ConfigError(msg.str());
    }
    return value.get<std::string>();
}

AtomSpecies parse_species(const json& value) {
    if (value.is_string()) return species_from_preset(value.get<std::string>());
    if (!value.is_object())
        throw ConfigError("field 'species' must be a preset name or an object of constants");
    reject_unknown_keys(value, {"name", "mass", "scattering_length", "wavenumber", "gamma"},
                        "'species'");
    AtomSpecies species;
    species.name = value.contains("name") ? require_string(value.at("name"), "species.name")
                                          : std::string("custom");
    species.mass = require_number(require_key(value, "mass"), "species.mass");
    species.scattering_length_a = parse_length(
        require_string(require_key(value, "scattering_length"), "species.scattering_length"));
    species.wavenumber_k = parse_wavenumber(
        require_string(require_key(value, "wavenumber"), "species.wavenumber"));
    species.gamma = require_number(require_key(value, "gamma"), "species.gamma");
    try {
        validate(species);
    } catch (const std::domain_error& e) {
        throw ConfigError(std::string("invalid species constants: ") + e.what());
    }
    return species;
}

ProfileShape parse_shape(const std::string& text) {
    if (text == "thomas-fermi") return ProfileShape::ThomasFermiSphere;
    if (text == "uniform") return ProfileShape::Uniform;
    throw ConfigError("field 'shape' must be 'thomas-fermi' or 'uniform', got '" + text + "'");
}

Command parse_command(const std::string& text) {
    if (text == "spectrum") return Command::Spectrum;
    if (text == "total-rate") return Command::TotalRate;
    if (text == "regime") return Command::Regime;
    if (text == "optical-density") return Command::OpticalDensity;
    if (text == "plot") return Command::Plot;
    throw ConfigError(
        "field 'command' must be one of spectrum, total-rate, regime, optical-density, "
        "plot; got '" + text + "'");
}

ThetaGrid parse_theta_grid(const json& value) {
    if (!value.is_object()) throw ConfigError("field 'theta_grid' must be an object");
    reject_unknown_keys(value, {"min", "max", "count", "spacing"}, "'theta_grid'");
    ThetaGrid grid;
    grid.min = require_number(require_key(value, "min"), "theta_grid.min");
    grid.max = require_number(require_key(value, "max"), "theta_grid.max");
    grid.count = value.contains("count")
                     ? static_cast<int>(require_number(value.at("count"), "theta_grid.count"))
                     : 200;
    if (value.contains("spacing")) {
        const auto spacing = require_string(value.at("spacing"), "theta_grid.spacing");
        if (spacing == "linear") grid.spacing = GridSpacing::Linear;
        else if (spacing == "log") grid.spacing = GridSpacing::Log;
        else throw ConfigError("theta_grid.spacing must be 'linear' or 'log'");
    }
    if (!(grid.min < grid.max))
        throw ConfigError("theta_grid.min must be smaller than theta_grid.max");
    if (grid.count < 1) throw ConfigError("theta_grid.count must be at least 1");
    if (grid.spacing == GridSpacing::Log && !(grid.min > 0.0))
        throw ConfigError("log-spaced theta_grid needs min > 0");
    if (grid.min < 0.0 || grid.max > std::numbers::pi)
        throw ConfigError("theta_grid must lie inside [0, pi]");
    return grid;
}

OutputSpec parse_output(const json& value) {
    if (!value.is_object()) throw ConfigError("field 'output' must be an object");
    reject_unknown_keys(value, {"format", "path"}, "'output'");
    OutputSpec output;
    if (value.contains("format")) {
        const auto format = require_string(value.at("format"), "output.format");
        if (format == "csv") output.format = OutputFormat::Csv;
        else if (format == "json") output.format = OutputFormat::Json;
        else throw ConfigError("output.format must be 'csv' or 'json'");
    }
    if (value.contains("path")) output.path = require_string(value.at("path"), "output.path");
    return output;
}

RunConfig config_from_json(const json& doc) {
    if (!doc.is_object()) throw ConfigError("config document must be a JSON object");
    reject_unknown_keys(doc,
                        {"species", "atom_number", "radius", "shape", "theta_grid",
                         "tolerance", "cutoff_factor", "output", "command", "detuning"},
                        "config document");

    RunConfig config;
    config.species = parse_species(require_key(doc, "species"));
    config.atom_number = require_number(require_key(doc, "atom_number"), "atom_number");
    if (config.atom_number < 0.0) throw ConfigError("atom_number must be non-negative");

    const auto& radius = require_key(doc, "radius");
    if (!radius.is_string())
        throw ConfigError("field 'radius' needs a unit suffix, e.g. \"3.63e-5 m\"");
    config.radius = parse_length(radius.get<std::string>());
    if (!(config.radius > 0.0)) throw ConfigError("radius must be positive");

    if (doc.contains("shape"))
        config.shape = parse_shape(require_string(doc.at("shape"), "shape"));
    if (doc.contains("theta_grid")) config.theta_grid = parse_theta_grid(doc.at("theta_grid"));
    if (doc.contains("tolerance")) {
        config.tolerance = require_number(doc.at("tolerance"), "tolerance");
        if (!(config.tolerance > 0.0)) throw ConfigError("tolerance must be positive");
    }
    if (doc.contains("cutoff_factor")) {
        config.cutoff_factor = require_number(doc.at("cutoff_factor"), "cutoff_factor");
        if (!(config.cutoff_factor > 0.0)) throw ConfigError("cutoff_factor must be positive");
    }
    if (doc.contains("output")) config.output = parse_output(doc.at("output"));
    config.command = parse_command(require_string(require_key(doc, "command"), "command"));
    if (doc.contains("detuning"))
        config.detuning = require_number(doc.at("detuning"), "detuning");
    return config;
}

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::ostringstream msg;
        msg << "parse error at byte " << e.byte << ": " << e.what();
        throw ConfigError(msg.str());
    }
}

void apply_override(json& doc, const std::string& spec) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0)
        throw ConfigError("override '" + spec + "' is not of the form key=value");
    const std::string path = spec.substr(0, eq);
    const std::string raw = spec.substr(eq + 1);

    json value;
    try {
        value = json::parse(raw);
    } catch (const json::parse_error&) {
        value = raw; // not valid JSON: treat as a plain string
    }

    json* node = &doc;
    std::size_t start = 0;
    while (true) {
        const auto dot = path.find('.', start);
        const std::string key = path.substr(start, dot - start);
        if (key.empty()) throw ConfigError("override '" + spec + "' has an empty key segment");
        if (dot == std::string::npos) {
            (*node)[key] = value;
            return;
        }
        if (!node->contains(key) || !(*node)[key].is_object()) (*node)[key] = json::object();
        node = &(*node)[key];
        start = dot + 1;
    }
}

} // namespace

double parse_length(const std::string& text) {
    return parse_suffixed(text, length_units, "length");
}

double parse_wavenumber(const std::string& text) {
    return parse_suffixed(text, wavenumber_units, "wavenumber");
}

RunConfig load_config(const std::string& json_text) {
    return config_from_json(parse_document(json_text));
}

RunConfig load_config(const std::string& json_text,
                      const std::vector<std::string>& overrides) {
    json doc = parse_document(json_text);
    for (const auto& spec : overrides) apply_override(doc, spec);
    return config_from_json(doc);
}

RunConfig load_config_file(const std::string& path,
                           const std::vector<std::string>& overrides) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_config(buffer.str(), overrides);
}

std::vector<double> make_theta_grid(const ThetaGrid& grid) {
    std::vector<double> thetas;
    thetas.reserve(static_cast<std::size_t>(grid.count));
    if (grid.count == 1) {
        thetas.push_back(grid.min);
        return thetas;
    }
    for (int i = 0; i < grid.count; ++i) {
        if (i == 0) {
            thetas.push_back(grid.min);
        } else if (i == grid.count - 1) {
            thetas.push_back(grid.max);
        } else if (grid.spacing == GridSpacing::Linear) {
            thetas.push_back(grid.min +
                             (grid.max - grid.min) * static_cast<double>(i) /
                                 static_cast<double>(grid.count - 1));
        } else {
            const double t = static_cast<double>(i) / static_cast<double>(grid.count - 1);
            thetas.push_back(std::exp(std::log(grid.min) +
                                      t * (std::log(grid.max) - std::log(grid.min))));
        }
    }
    return thetas;
}

ThetaGrid default_theta_grid(const CondensateProfile& profile, double cutoff_factor) {
    ThetaGrid grid;
    grid.min = theta_min(profile, cutoff_factor);
    grid.max = std::numbers::pi;
    grid.count = 200;
    grid.spacing = GridSpacing::Log;
    return grid;
}

} // namespace becscat
