#pragma once

#include <stdexcept>
#include <string>

namespace osg {

enum class errc {
    missing_torso,
    degenerate_extent,
    empty_path,
    degenerate_shape,
    empty_image,
    degenerate_hull,
    invalid_order,
    degenerate_contour,
    length_mismatch,
    duplicate_label,
    parse_error,
    version_mismatch,
    missing_salient,
    empty_language,
    all_references_missing,
    unknown_label,
    empty_dataset,
    out_of_order,
    invalid_argument,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

} // namespace osg
