"""Model endpoint access with record/replay cassettes.

Replay mode answers every completion from a cassette keyed by a request
digest and never touches the network, which keeps pipeline runs
reproducible and testable offline.  Record mode performs the live call
and appends the exchange to the cassette as it goes.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import threading
import time
from dataclasses import dataclass
from datetime import datetime, timezone
from enum import Enum
from pathlib import Path
from typing import Callable

import requests

from .prompting import Message, MessageSequence

__all__ = [
    "GatewayMode",
    "GenerationParams",
    "ModelEndpoint",
    "CassetteRecord",
    "Cassette",
    "GatewayError",
    "TransportError",
    "TransientTransportError",
    "MissingCredentialError",
    "CassetteMissError",
    "api_key_env_var",
    "request_digest",
    "complete",
]

logger = logging.getLogger(__name__)

MAX_ATTEMPTS = 3
BACKOFF_SECONDS = 0.5
REQUEST_TIMEOUT = 120.0


class GatewayMode(Enum):
    LIVE = "live"
    RECORD = "record"
    REPLAY = "replay"


class GatewayError(Exception):
    """Base class for completion failures."""


class TransportError(GatewayError):
    """The endpoint rejected the request or returned an unusable body."""

    def __init__(self, message: str, status_code: int | None = None, body: str = ""):
        super().__init__(message)
        self.status_code = status_code
        self.body = body


class TransientTransportError(TransportError):
    """A failure worth retrying: connection trouble, 429, or a 5xx."""


class MissingCredentialError(GatewayError):
    """No API key in the environment for the endpoint's provider."""


class CassetteMissError(GatewayError):
    """Replay found no recorded response for the request digest."""

    def __init__(self, message: str, digest: str):
        super().__init__(message)
        self.digest = digest


@dataclass(frozen=True)
class GenerationParams:
    """Sampling parameters carried by an endpoint."""

    temperature: float = 0.7
    max_tokens: int = 1024
    seed: int | None = None

    def __post_init__(self) -> None:
        if not 0.0 <= self.temperature <= 2.0:
            raise ValueError(f"temperature {self.temperature} outside [0, 2]")
        if self.max_tokens < 1:
            raise ValueError(f"max_tokens must be positive, got {self.max_tokens}")


@dataclass(frozen=True)
class ModelEndpoint:
    """A chat-completion endpoint plus its default sampling parameters."""

    provider_id: str
    model_name: str
    base_url: str
    params: GenerationParams = GenerationParams()

    def __post_init__(self) -> None:
        for name in ("provider_id", "model_name", "base_url"):
            if not getattr(self, name).strip():
                raise ValueError(f"endpoint {name} is empty")


def api_key_env_var(provider_id: str) -> str:
    """Environment variable holding the provider's API key.

    Credentials come from the environment only, never from config files.
    """
    return provider_id.upper().replace("-", "_") + "_API_KEY"


def request_digest(endpoint: ModelEndpoint, messages: MessageSequence) -> str:
    """Stable digest of everything that identifies a request.

    Hashes a canonical JSON encoding of the endpoint identity, the
    sampling parameters, and the message sequence, so equal requests
    collide and any change to them does not.
    """
    payload = {
        "endpoint": {
            "provider_id": endpoint.provider_id,
            "model_name": endpoint.model_name,
            "base_url": endpoint.base_url,
        },
        "params": {
            "temperature": endpoint.params.temperature,
            "max_tokens": endpoint.params.max_tokens,
            "seed": endpoint.params.seed,
        },
        "messages": [
            {"role": message.role.value, "content": message.content}
            for message in messages
        ],
    }
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class CassetteRecord:
    request_digest: str
    response_text: str
    timestamp: str


class Cassette:
    """Append-only JSON Lines store of recorded exchanges.

    Appends are serialized under a lock so concurrent pipeline runs can
    share one cassette.  Replay hands out the records for a digest in
    recorded order, then sticks on the last one, so replaying a run is
    deterministic and re-replaying it gives the same answers.
    """

    def __init__(self, path: str | Path | None = None):
        self.path = Path(path) if path is not None else None
        self.records: list[CassetteRecord] = []
        self._lock = threading.Lock()
        self._by_digest: dict[str, list[int]] = {}
        self._cursors: dict[str, int] = {}
        if self.path is not None and self.path.exists():
            for number, line in enumerate(
                self.path.read_text(encoding="utf-8").splitlines(), start=1
            ):
                if not line.strip():
                    continue
                try:
                    data = json.loads(line)
                    record = CassetteRecord(
                        request_digest=data["request_digest"],
                        response_text=data["response_text"],
                        timestamp=data.get("timestamp", ""),
                    )
                except (json.JSONDecodeError, KeyError, TypeError) as exc:
                    raise GatewayError(
                        f"cassette {self.path} line {number} is malformed: {exc}"
                    ) from exc
                self._index(record)

    def _index(self, record: CassetteRecord) -> None:
        self._by_digest.setdefault(record.request_digest, []).append(len(self.records))
        self.records.append(record)

    def __len__(self) -> int:
        return len(self.records)

    def append(self, record: CassetteRecord) -> None:
        with self._lock:
            if self.path is not None:
                line = json.dumps(
                    {
                        "request_digest": record.request_digest,
                        "response_text": record.response_text,
                        "timestamp": record.timestamp,
                    },
                    ensure_ascii=False,
                    sort_keys=True,
                )
                self.path.parent.mkdir(parents=True, exist_ok=True)
                with self.path.open("a", encoding="utf-8") as handle:
                    handle.write(line + "\n")
            self._index(record)

    def lookup(self, digest: str) -> CassetteRecord | None:
        with self._lock:
            indices = self._by_digest.get(digest)
            if not indices:
                return None
            cursor = self._cursors.get(digest, 0)
            if cursor >= len(indices):
                cursor = len(indices) - 1  # stick on the final recording
            self._cursors[digest] = cursor + 1
            return self.records[indices[cursor]]


Transport = Callable[[ModelEndpoint, MessageSequence], str]


def http_transport(endpoint: ModelEndpoint, messages: MessageSequence) -> str:
    """POST a chat completion and return the first choice's content."""
    env_var = api_key_env_var(endpoint.provider_id)
    api_key = os.environ.get(env_var)
    if not api_key:
        raise MissingCredentialError(
            f"no API key for provider {endpoint.provider_id!r}; set {env_var}"
        )
    payload: dict = {
        "model": endpoint.model_name,
        "messages": [
            {"role": message.role.value, "content": message.content}
            for message in messages
        ],
        "temperature": endpoint.params.temperature,
        "max_tokens": endpoint.params.max_tokens,
    }
    if endpoint.params.seed is not None:
        payload["seed"] = endpoint.params.seed
    try:
        response = requests.post(
            endpoint.base_url,
            json=payload,
            headers={
                "Authorization": f"Bearer {api_key}",
                "Content-Type": "application/json",
            },
            timeout=REQUEST_TIMEOUT,
        )
    except requests.RequestException as exc:
        raise TransientTransportError(f"request to {endpoint.base_url} failed: {exc}") from exc
    if response.status_code == 429 or response.status_code >= 500:
        raise TransientTransportError(
            f"{endpoint.base_url} answered {response.status_code}",
            status_code=response.status_code,
            body=response.text[:2000],
        )
    if response.status_code >= 400:
        raise TransportError(
            f"{endpoint.base_url} answered {response.status_code}",
            status_code=response.status_code,
            body=response.text[:2000],
        )
    try:
        data = response.json()
        content = data["choices"][0]["message"]["content"]
    except (ValueError, KeyError, IndexError, TypeError) as exc:
        raise TransportError(
            f"unexpected response shape from {endpoint.base_url}: {exc}",
            status_code=response.status_code,
            body=response.text[:2000],
        ) from exc
    if not isinstance(content, str):
        raise TransportError(f"non-text completion from {endpoint.base_url}")
    return content


def _call_with_retries(
    transport: Transport,
    endpoint: ModelEndpoint,
    messages: MessageSequence,
    sleeper: Callable[[float], None],
) -> str:
    last: TransientTransportError | None = None
    for attempt in range(MAX_ATTEMPTS):
        try:
            return transport(endpoint, messages)
        except TransientTransportError as exc:
            last = exc
            if attempt + 1 < MAX_ATTEMPTS:
                delay = BACKOFF_SECONDS * (2**attempt)
                logger.warning(
                    "transient failure from %s (attempt %d/%d), retrying in %.1fs: %s",
                    endpoint.model_name,
                    attempt + 1,
                    MAX_ATTEMPTS,
                    delay,
                    exc,
                )
                sleeper(delay)
    assert last is not None
    raise last


def complete(
    endpoint: ModelEndpoint,
    messages: MessageSequence,
    mode: GatewayMode,
    cassette: Cassette | None = None,
    transport: Transport | None = None,
    sleeper: Callable[[float], None] = time.sleep,
) -> str:
    """Resolve one completion under the given mode.

    Replay is answered purely from the cassette and raises
    :class:`CassetteMissError` (carrying the digest) when no recording
    matches.  Live and record modes call the transport, retrying
    transient failures with exponential backoff; record mode then
    appends the exchange to the cassette.
    """
    if not messages:
        raise ValueError("empty message sequence")
    if not all(isinstance(message, Message) for message in messages):
        raise ValueError("messages must be Message instances")
    digest = request_digest(endpoint, messages)
    if mode is GatewayMode.REPLAY:
        if cassette is None:
            raise CassetteMissError("replay mode requires a cassette", digest=digest)
        record = cassette.lookup(digest)
        if record is None:
            raise CassetteMissError(
                f"no recorded response for request digest {digest}", digest=digest
            )
        return record.response_text
    if mode is GatewayMode.RECORD and cassette is None:
        raise GatewayError("record mode requires a cassette")
    text = _call_with_retries(transport or http_transport, endpoint, messages, sleeper)
    if mode is GatewayMode.RECORD:
        assert cassette is not None
        cassette.append(
            CassetteRecord(
                request_digest=digest,
                response_text=text,
                timestamp=datetime.now(timezone.utc).isoformat(),
            )
        )
    return text
