#ifndef HKDEHN_RECORDS_HPP
#define HKDEHN_RECORDS_HPP

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hkdehn/parental.hpp"

namespace hkdehn {

inline constexpr int kManifoldSchemaVersion = 1;
inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";

/// Rejected input document. `pointer` is the JSON pointer of the offending
/// value ("" for the document root).
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string pointer, const std::string& message)
      : std::runtime_error(pointer.empty() ? message : pointer + ": " + message), pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

/// Parses a ManifoldFile document and enforces every record invariant.
ManifoldRecord manifold_from_json(const nlohmann::json& doc);
nlohmann::json manifold_to_json(const ManifoldRecord& record);

/// Reads and parses a ManifoldFile. Missing files raise SchemaError with
/// an empty pointer.
ManifoldRecord load_manifold_file(const std::filesystem::path& path);

/// ReportFile: one verdict plus provenance.
struct Report {
  std::string toolVersion = kToolVersion;
  ConstantMode constantMode = ConstantMode::Published;
  BoundMode boundMode = BoundMode::Nice;
  double quadTol = 0.0;
  double epsilon = 0.0;
  std::string parent;
  std::string child;
  ParentalVerdict verdict;
};

nlohmann::json verdict_to_json(const ParentalVerdict& verdict);
ParentalVerdict verdict_from_json(const nlohmann::json& doc);
nlohmann::json report_to_json(const Report& report);
Report report_from_json(const nlohmann::json& doc);

}  // namespace hkdehn

#endif  // HKDEHN_RECORDS_HPP
