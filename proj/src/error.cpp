#include "osg/error.hpp"

namespace osg {

const char* errc_name(errc c) {
    switch (c) {
    case errc::missing_torso: return "MissingTorso";
    case errc::degenerate_extent: return "DegenerateExtent";
    case errc::empty_path: return "EmptyPath";
    case errc::degenerate_shape: return "DegenerateShape";
    case errc::empty_image: return "EmptyImage";
    case errc::degenerate_hull: return "DegenerateHull";
    case errc::invalid_order: return "InvalidOrder";
    case errc::degenerate_contour: return "DegenerateContour";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::duplicate_label: return "DuplicateLabel";
    case errc::parse_error: return "ParseError";
    case errc::version_mismatch: return "VersionMismatch";
    case errc::missing_salient: return "MissingSalient";
    case errc::empty_language: return "EmptyLanguage";
    case errc::all_references_missing: return "AllReferencesMissing";
    case errc::unknown_label: return "UnknownLabel";
    case errc::empty_dataset: return "EmptyDataset";
    case errc::out_of_order: return "OutOfOrder";
    case errc::invalid_argument: return "InvalidArgument";
    }
    return "UnknownError";
}

} // namespace osg
