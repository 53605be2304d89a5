"""Chat-endpoint client that asks a language model to tag variables.

Experiments never require this module: tag files parse directly via
:mod:`tagorient.tags`.  It exists to regenerate such files, with every
response cached on disk so repeat runs need no network at all.
"""

from __future__ import annotations

import hashlib
import json
import os
import re
import tempfile
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from .tags import TagAssignment, parse_tag_lines

SYSTEM_PROMPT = (
    "You are an expert in annotating variables to provide additional "
    "information that helps to support a causal discovery algorithm."
)

# The templates state only what a tag or type is and how to format the
# reply.  They carry no edges, no graph and no data values, so the model
# cannot leak structure back into the evaluation.
TAG_TEMPLATE = (
    "A tag is a single word or short phrase that describes a variable. "
    "Tags should be general enough to be applicable to multiple variables "
    "but specific enough to identify differences between similar "
    "variables. Tags will be used to identify causal directions between "
    "variables. Therefore, the individual sets of tags per variable "
    "should be discriminative enough to inform the algorithm. Variables "
    "can have multiple tags.\n"
    "Consider the following variables: {variables}.\n"
    "\n"
    "Please generate a list of tags that can be assigned to one or "
    "multiple variables. Generate the number of tags necessary to strike "
    "a good balance between expressivity and specificity. Avoid duplicate "
    "tags that contain the same set of variables. Reply with one line per "
    "tag, where each line starts with the name of the tag, followed by a "
    "colon, and then a comma-separated list of variables that have that "
    "tag. The output should be machine parsable. For that reason, do not "
    "include any explanations or additional comments."
)

TYPE_TEMPLATE = (
    "A type is a single word or short phrase that describes a variable. "
    "Types should be general enough to be applicable to multiple "
    "variables but specific enough to identify differences between "
    "similar variables. Types will be used to identify causal directions "
    "between variables. Therefore, the individual types should be "
    "discriminative enough to inform the algorithm. Variables are "
    "assigned to a single type only.\n"
    "Consider the following variables: {variables}.\n"
    "\n"
    "Please generate a list of types that can be assigned to one or "
    "multiple variables. Generate the number of types necessary to strike "
    "a good balance between expressivity and specificity. Reply with one "
    "line per type, where each line starts with the name of the type, "
    "followed by a colon, and then a comma-separated list of variables "
    "that belong to that type. Make sure that no variable appears in "
    "more than one the lists. The output should be machine parsable. For "
    "that reason, do not include any explanations or additional comments."
)


class EmptyVariableList(ValueError):
    pass


class TypeOverlap(ValueError):
    """Typing mode requires disjoint variable lists."""

    def __init__(self, variable: str):
        super().__init__(f"variable {variable!r} assigned to several types")
        self.variable = variable


class HttpError(RuntimeError):
    def __init__(self, status: int, detail: str = ""):
        super().__init__(f"endpoint returned status {status}: {detail[:200]}")
        self.status = status


@dataclass(frozen=True)
class PromptSpec:
    system: str
    instruction: str
    variables: tuple[str, ...]
    mode: str

    def render(self) -> str:
        return self.instruction.replace(
            "{variables}", ", ".join(self.variables)
        )


@dataclass
class ProviderConfig:
    base_url: str
    model: str
    api_key_env: str = "LLM_API_KEY"
    temperature: float = 0.0
    timeout: float = 120.0
    cache_dir: str = field(
        default_factory=lambda: os.path.join(
            os.path.expanduser("~"), ".cache", "tagorient"
        )
    )


def build_prompt(variables: Sequence[str], mode: str = "tag") -> PromptSpec:
    """Fill the tag or type instruction template with the variable names."""
    if not variables:
        raise EmptyVariableList("need at least one variable")
    if mode == "tag":
        template = TAG_TEMPLATE
    elif mode == "type":
        template = TYPE_TEMPLATE
    else:
        raise ValueError(f"mode must be 'tag' or 'type', not {mode!r}")
    return PromptSpec(SYSTEM_PROMPT, template, tuple(variables), mode)


def cache_path(cfg: ProviderConfig, prompt: str) -> Path:
    digest = hashlib.sha256(prompt.encode()).hexdigest()
    safe_model = re.sub(r"[^A-Za-z0-9._-]", "_", cfg.model)
    return Path(cfg.cache_dir) / f"{safe_model}-{digest}.json"


def _atomic_write(path: Path, payload: dict) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(payload, fh)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _post_chat(cfg: ProviderConfig, spec: PromptSpec) -> dict:
    import requests

    headers = {"Content-Type": "application/json"}
    key = os.environ.get(cfg.api_key_env, "")
    if key:
        headers["Authorization"] = f"Bearer {key}"
    body = {
        "model": cfg.model,
        "temperature": cfg.temperature,
        "messages": [
            {"role": "system", "content": spec.system},
            {"role": "user", "content": spec.render()},
        ],
    }
    resp = requests.post(
        cfg.base_url, json=body, headers=headers, timeout=cfg.timeout
    )
    if resp.status_code != 200:
        raise HttpError(resp.status_code, resp.text)
    return resp.json()


def reply_text(payload: dict) -> str:
    try:
        return payload["choices"][0]["message"]["content"]
    except (KeyError, IndexError, TypeError):
        raise ValueError("response payload has no message content") from None


def request_tags(
    cfg: ProviderConfig,
    spec: PromptSpec,
    transport=None,
) -> TagAssignment:
    """Obtain an assignment for the prompt, from cache when possible.

    A cache hit never touches the network, so identical (model, prompt)
    pairs always reproduce the same assignment.  ``transport`` replaces
    the HTTP POST and must return the decoded response payload.
    """
    path = cache_path(cfg, spec.render())
    if path.exists():
        with open(path) as fh:
            payload = json.load(fh)
    else:
        payload = (transport or _post_chat)(cfg, spec)
        _atomic_write(path, payload)
    assignment = parse_tag_lines(reply_text(payload), spec.variables)
    if spec.mode == "type":
        for var in assignment.variables:
            if len(assignment.tags_of(var)) > 1:
                raise TypeOverlap(var)
    return assignment
