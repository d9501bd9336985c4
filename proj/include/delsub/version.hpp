#ifndef DELSUB_VERSION_HPP
#define DELSUB_VERSION_HPP

namespace delsub {

inline constexpr const char* kLibraryVersion = "0.1.0";
inline constexpr const char* kReportSchemaVersion = "1";

}  // namespace delsub

#endif
