#ifndef URD_INGREDIENTS_HPP
#define URD_INGREDIENTS_HPP

#include "urd/design.hpp"
#include "urd/error.hpp"
#include "urd/verifier.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace urd {

// An ingredient that exists but failed verification against its spec.
class IngredientError : public Error {
public:
    IngredientError(const std::string& what, VerificationReport report)
        : Error("IngredientError: " + what), report_(std::move(report))
    {
    }
    const VerificationReport& report() const { return report_; }

private:
    VerificationReport report_;
};

// No channel could supply a design; one reason per channel tried.
class Unavailable : public Error {
public:
    explicit Unavailable(std::vector<std::string> reasons);
    const std::vector<std::string>& reasons() const { return reasons_; }

private:
    std::vector<std::string> reasons_;
};

// 4-RGDD of type q^4 (a resolvable transversal design) from GF(q): points
// (i, x) -> i*q + x, block B(m,b) = {(i, b + m*w_i)} with w_i the field
// elements encoded 0,1,2,3; the q classes are indexed by m.
// Throws IngredientError unless q >= 4 is a prime power.
Design rtd_prime_power(int q);

// Decodes and verifies; unverified ingredients never leave this function.
Design import_ingredient(const std::filesystem::path& file, const DesignSpec& spec);

// Directory of verified ingredient files: <root>/<kind>/<params>.json,
// e.g. store/rgdd/3^8.json or store/urgdd/12^3_0,16.json.
class IngredientStore {
public:
    explicit IngredientStore(std::filesystem::path root) : root_(std::move(root)) {}

    // $URD_STORE if set, else ./store.
    static IngredientStore from_env();

    const std::filesystem::path& root() const { return root_; }
    std::filesystem::path path_for(const DesignSpec& spec) const;
    // nullopt when absent; IngredientError when present but invalid.
    std::optional<Design> load(const DesignSpec& spec) const;
    // Best effort: returns false if the file could not be written.
    bool save(const DesignSpec& spec, const Design& d) const;

private:
    std::filesystem::path root_;
};

enum class Channel { Field, Store, Search };

struct IngredientRequest {
    DesignSpec spec;
    std::vector<Channel> channels{Channel::Field, Channel::Store, Channel::Search};
};

struct ObtainOptions {
    double search_budget = 60.0; // seconds; 0 disables the search channel
    std::uint64_t seed = 1;
    std::optional<IngredientStore> store;
    bool save_found = true;
};

// 4-frames of type 6^t whose existence is open for these t.
bool frame_open_in_literature(const DesignSpec& spec);

// Tries the requested channels in order and returns the first verified
// design. Throws Unavailable with the reason from each channel.
Design obtain(const IngredientRequest& request, const ObtainOptions& options = {});

} // namespace urd

#endif // URD_INGREDIENTS_HPP
