"""Component fault tree modeling and analysis toolkit.

Define reusable component failure models with typed failure-mode ports,
compose them into systems, flatten the composition into classic fault
trees, and run qualitative (minimal cut sets) and quantitative (exact
top-event probability) analyses.
"""

from .errors import (
    CftError,
    ModelError,
    NamespaceMismatch,
    NonCoherentTree,
    OracleLimitError,
    ParseError,
)
from .evaluate import evaluate_scenario
from .flatten import flatten, flatten_with_index
from .metrics import MetricsReport, model_metrics
from .model import (
    BasicEvent,
    ComponentDefinition,
    Connection,
    EventRef,
    Gate,
    Instance,
    OutputLogic,
    Port,
    PortEnd,
    PortRef,
    SystemModel,
    TopEvent,
    ValidationReport,
)
from .tree import EventNode, FaultTree, GateNode, and_, event, or_, xor_
from .validate import validate_definition, validate_system

__version__ = "0.1.0"

__all__ = [
    "CftError",
    "ModelError",
    "NamespaceMismatch",
    "NonCoherentTree",
    "OracleLimitError",
    "ParseError",
    "evaluate_scenario",
    "flatten",
    "flatten_with_index",
    "MetricsReport",
    "model_metrics",
    "BasicEvent",
    "ComponentDefinition",
    "Connection",
    "EventRef",
    "Gate",
    "Instance",
    "OutputLogic",
    "Port",
    "PortEnd",
    "PortRef",
    "SystemModel",
    "TopEvent",
    "ValidationReport",
    "EventNode",
    "FaultTree",
    "GateNode",
    "and_",
    "event",
    "or_",
    "xor_",
    "validate_definition",
    "validate_system",
    "__version__",
]
