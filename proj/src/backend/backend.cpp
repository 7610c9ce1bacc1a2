#include "si/backend/backend.hpp"

#include "si/backend/oracle.hpp"
#include "si/backend/remote.hpp"
#include "si/backend/replay.hpp"
#include "si/errors.hpp"

namespace si::backend {

std::unique_ptr<Backend> make_backend(const BackendDescriptor& desc) {
  switch (desc.kind) {
    case BackendKind::replay:
      return std::make_unique<ReplayBackend>(ReplayBackend::from_file(desc.fixture_path));
    case BackendKind::oracle:
      return std::make_unique<OracleBackend>(desc.task);
    case BackendKind::remote:
      return std::make_unique<RemoteBackend>(desc.remote);
  }
  throw Error("unknown backend kind");
}

BackendKind backend_kind_from_string(const std::string& s) {
  if (s == "replay") return BackendKind::replay;
  if (s == "oracle") return BackendKind::oracle;
  if (s == "remote") return BackendKind::remote;
  throw Error("unknown backend: " + s + " (expected replay, oracle or remote)");
}

}  // namespace si::backend
