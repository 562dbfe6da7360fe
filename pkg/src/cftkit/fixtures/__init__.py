"""Executable reconstructions of the two industrial case studies.

Each case study exists in two independent forms: a component-wise system
composition (built here gate by gate) and a hand-authored classic fault
tree over the same qualified event names. The pairs double as the
regression corpus: flattening one side must be logically equivalent to
the other.

Structural choices not fixed by the written system descriptions:
  - the channel interface combines redundant channels pessimistically
    (plain OR on the erroneous side, no mismatch detection);
  - the cross link adds one shared internal event, OR-ed into all four
    propagations (a common-cause reading of "adds a failure portion");
  - a switch's cross-link forwarding is pure propagation and does not
    carry the switch's own failure;
  - losing a channel's actuation requires losing either actor of that
    side (actor losses OR-ed under the mission AND);
  - every basic event defaults to probability 0.01.
"""

from __future__ import annotations

import json
from importlib import resources

from ..model import (
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
)
from ..tree import EventNode, FaultTree, and_, or_

P_DEFAULT = 0.01


def _conn(src_inst, src_port, dst_inst, dst_port):
    return Connection(PortEnd(src_inst, src_port), PortEnd(dst_inst, dst_port))


def _or(*args):
    return Gate("or", tuple(args))


def _and(*args):
    return Gate("and", tuple(args))


# --- case study A: the situation display ---


def situation_display_cft() -> SystemModel:
    sensor = ComponentDefinition(
        "Sensor",
        ports=(Port("o", "out", ("loss", "err")),),
        events=(BasicEvent("s_loss", P_DEFAULT), BasicEvent("s_err", P_DEFAULT)),
        outputs=(
            OutputLogic("o", "loss", EventRef("s_loss")),
            OutputLogic("o", "err", EventRef("s_err")),
        ),
    )
    gps = ComponentDefinition(
        "GPSReceiver",
        ports=(Port("o", "out", ("loss", "err")),),
        events=(BasicEvent("g_loss", P_DEFAULT), BasicEvent("g_err", P_DEFAULT)),
        outputs=(
            OutputLogic("o", "loss", EventRef("g_loss")),
            OutputLogic("o", "err", EventRef("g_err")),
        ),
    )
    channel = ComponentDefinition(
        "Channel",
        ports=(
            Port("i", "in", ("loss", "err")),
            Port("o", "out", ("loss", "err")),
        ),
        events=(BasicEvent("c_loss", P_DEFAULT), BasicEvent("c_err", P_DEFAULT)),
        outputs=(
            OutputLogic(
                "o", "loss", _or(PortRef("i", "loss"), EventRef("c_loss"))
            ),
            OutputLogic(
                "o", "err", _or(PortRef("i", "err"), EventRef("c_err"))
            ),
        ),
    )
    interface = ComponentDefinition(
        "ChannelInterface",
        ports=(
            Port("i1", "in", ("loss", "err")),
            Port("i2", "in", ("loss", "err")),
            Port("o", "out", ("loss", "err")),
        ),
        events=(
            BasicEvent("ci_loss", P_DEFAULT),
            BasicEvent("ci_err", P_DEFAULT),
        ),
        outputs=(
            OutputLogic(
                "o",
                "loss",
                _or(
                    _and(PortRef("i1", "loss"), PortRef("i2", "loss")),
                    EventRef("ci_loss"),
                ),
            ),
            # pessimistic: any erroneous channel propagates (OR, not XOR)
            OutputLogic(
                "o",
                "err",
                _or(
                    PortRef("i1", "err"),
                    PortRef("i2", "err"),
                    EventRef("ci_err"),
                ),
            ),
        ),
    )
    processing = ComponentDefinition(
        "Processing",
        ports=(
            Port("is", "in", ("loss", "err")),
            Port("ig", "in", ("loss", "err")),
            Port("o", "out", ("lo", "plo", "err")),
        ),
        events=(
            BasicEvent("p_loss", P_DEFAULT),
            BasicEvent("p_err", P_DEFAULT),
        ),
        outputs=(
            OutputLogic(
                "o",
                "lo",
                _or(
                    _and(PortRef("is", "loss"), PortRef("ig", "loss")),
                    EventRef("p_loss"),
                ),
            ),
            # worst case: partial loss uses OR instead of the more precise XOR
            OutputLogic(
                "o",
                "plo",
                _or(
                    PortRef("is", "loss"),
                    PortRef("ig", "loss"),
                    EventRef("p_loss"),
                ),
            ),
            OutputLogic(
                "o",
                "err",
                _or(
                    PortRef("is", "err"),
                    PortRef("ig", "err"),
                    EventRef("p_err"),
                ),
            ),
        ),
    )
    return SystemModel(
        name="SituationDisplay",
        definitions=(sensor, gps, channel, interface, processing),
        instances=(
            Instance("sensor", "Sensor"),
            Instance("gps", "GPSReceiver"),
            Instance("ch1", "Channel"),
            Instance("ch2", "Channel"),
            Instance("ci", "ChannelInterface"),
            Instance("proc", "Processing"),
        ),
        connections=(
            _conn("gps", "o", "ch1", "i"),
            _conn("gps", "o", "ch2", "i"),
            _conn("ch1", "o", "ci", "i1"),
            _conn("ch2", "o", "ci", "i2"),
            _conn("sensor", "o", "proc", "is"),
            _conn("ci", "o", "proc", "ig"),
        ),
        top_events=(
            TopEvent("Lo", "proc", "o", "lo"),
            TopEvent("pLo", "proc", "o", "plo"),
            TopEvent("Err", "proc", "o", "err"),
        ),
    )


def situation_display_classic() -> FaultTree:
    """Hand-authored deep classic tree over the same 12 qualified events."""
    s_loss = EventNode("sensor.s_loss", P_DEFAULT)
    s_err = EventNode("sensor.s_err", P_DEFAULT)
    g_loss = EventNode("gps.g_loss", P_DEFAULT)
    g_err = EventNode("gps.g_err", P_DEFAULT)
    c1_loss = EventNode("ch1.c_loss", P_DEFAULT)
    c1_err = EventNode("ch1.c_err", P_DEFAULT)
    c2_loss = EventNode("ch2.c_loss", P_DEFAULT)
    c2_err = EventNode("ch2.c_err", P_DEFAULT)
    ci_loss = EventNode("ci.ci_loss", P_DEFAULT)
    ci_err = EventNode("ci.ci_err", P_DEFAULT)
    p_loss = EventNode("proc.p_loss", P_DEFAULT)
    p_err = EventNode("proc.p_err", P_DEFAULT)

    branch1 = or_(c1_loss, g_loss)
    branch2 = or_(c2_loss, g_loss)
    gps_path = or_(ci_loss, and_(branch1, branch2))
    lo = or_(p_loss, and_(s_loss, gps_path))
    # identical shape, except the conjunction with sensor loss becomes
    # a disjunction
    plo = or_(p_loss, or_(s_loss, gps_path))
    err = or_(s_err, g_err, c1_err, c2_err, ci_err, p_err)
    return FaultTree(
        "ClassicSituationDisplay", {"Lo": lo, "pLo": plo, "Err": err}
    )


# --- case study B: the cross link redundancy ---


def crosslink_cft() -> SystemModel:
    comm = ComponentDefinition(
        "CommSource",
        ports=(Port("o", "out", ("loss",)),),
        events=(BasicEvent("comm_fail", P_DEFAULT),),
        outputs=(OutputLogic("o", "loss", EventRef("comm_fail")),),
    )
    controller = ComponentDefinition(
        "Controller",
        ports=(Port("o", "out", ("loss",)),),
        events=(BasicEvent("fail", P_DEFAULT),),
        outputs=(OutputLogic("o", "loss", EventRef("fail")),),
    )
    switch = ComponentDefinition(
        "Switch",
        ports=(
            Port("comm", "in", ("loss",)),
            Port("ecu", "in", ("loss",)),
            Port("ccu", "in", ("loss",)),
            Port("cl_in", "in", ("loss_red_ecu", "loss_red_ccu")),
            Port("cl_out", "out", ("loss_ecu", "loss_ccu")),
            Port("o", "out", ("loss_of_channel",)),
        ),
        events=(BasicEvent("sw_fail", P_DEFAULT),),
        outputs=(
            # pure propagation to the other channel, no sw_fail term
            OutputLogic("cl_out", "loss_ecu", PortRef("ecu", "loss")),
            OutputLogic("cl_out", "loss_ccu", PortRef("ccu", "loss")),
            # no communication input, the switch itself down, or both
            # ECUs and both CCUs down
            OutputLogic(
                "o",
                "loss_of_channel",
                _or(
                    PortRef("comm", "loss"),
                    EventRef("sw_fail"),
                    _and(
                        PortRef("ecu", "loss"),
                        PortRef("cl_in", "loss_red_ecu"),
                        PortRef("ccu", "loss"),
                        PortRef("cl_in", "loss_red_ccu"),
                    ),
                ),
            ),
        ),
    )
    crosslink = ComponentDefinition(
        "CrossLink",
        ports=(
            Port("a", "in", ("loss_ecu", "loss_ccu")),
            Port("b", "in", ("loss_ecu", "loss_ccu")),
            Port("to_a", "out", ("loss_red_ecu", "loss_red_ccu")),
            Port("to_b", "out", ("loss_red_ecu", "loss_red_ccu")),
        ),
        events=(BasicEvent("cl_int", P_DEFAULT),),
        outputs=(
            OutputLogic(
                "to_a",
                "loss_red_ecu",
                _or(PortRef("b", "loss_ecu"), EventRef("cl_int")),
            ),
            OutputLogic(
                "to_a",
                "loss_red_ccu",
                _or(PortRef("b", "loss_ccu"), EventRef("cl_int")),
            ),
            OutputLogic(
                "to_b",
                "loss_red_ecu",
                _or(PortRef("a", "loss_ecu"), EventRef("cl_int")),
            ),
            OutputLogic(
                "to_b",
                "loss_red_ccu",
                _or(PortRef("a", "loss_ccu"), EventRef("cl_int")),
            ),
        ),
    )
    actor = ComponentDefinition(
        "Actor",
        ports=(
            Port("i", "in", ("loss_of_channel",)),
            Port("o", "out", ("loss",)),
        ),
        events=(BasicEvent("act_fail", P_DEFAULT),),
        outputs=(
            OutputLogic(
                "o",
                "loss",
                _or(PortRef("i", "loss_of_channel"), EventRef("act_fail")),
            ),
        ),
    )
    mission = ComponentDefinition(
        "Mission",
        ports=(
            Port("a1", "in", ("loss",)),
            Port("a2", "in", ("loss",)),
            Port("b1", "in", ("loss",)),
            Port("b2", "in", ("loss",)),
            Port("o", "out", ("loss_of_actuation",)),
        ),
        events=(),
        outputs=(
            OutputLogic(
                "o",
                "loss_of_actuation",
                _and(
                    _or(PortRef("a1", "loss"), PortRef("a2", "loss")),
                    _or(PortRef("b1", "loss"), PortRef("b2", "loss")),
                ),
            ),
        ),
    )

    instances = [
        Instance("comm_A", "CommSource"),
        Instance("ecu_A", "Controller"),
        Instance("ccu_A", "Controller"),
        Instance("sw_A", "Switch"),
        Instance("actor1_A", "Actor"),
        Instance("actor2_A", "Actor"),
        Instance("comm_B", "CommSource"),
        Instance("ecu_B", "Controller"),
        Instance("ccu_B", "Controller"),
        Instance("sw_B", "Switch"),
        Instance("actor1_B", "Actor"),
        Instance("actor2_B", "Actor"),
        Instance("crosslink", "CrossLink"),
        Instance("mission", "Mission"),
    ]
    connections = [
        _conn("comm_A", "o", "sw_A", "comm"),
        _conn("ecu_A", "o", "sw_A", "ecu"),
        _conn("ccu_A", "o", "sw_A", "ccu"),
        _conn("comm_B", "o", "sw_B", "comm"),
        _conn("ecu_B", "o", "sw_B", "ecu"),
        _conn("ccu_B", "o", "sw_B", "ccu"),
        _conn("sw_A", "cl_out", "crosslink", "a"),
        _conn("sw_B", "cl_out", "crosslink", "b"),
        _conn("crosslink", "to_a", "sw_A", "cl_in"),
        _conn("crosslink", "to_b", "sw_B", "cl_in"),
        _conn("sw_A", "o", "actor1_A", "i"),
        _conn("sw_A", "o", "actor2_A", "i"),
        _conn("sw_B", "o", "actor1_B", "i"),
        _conn("sw_B", "o", "actor2_B", "i"),
        _conn("actor1_A", "o", "mission", "a1"),
        _conn("actor2_A", "o", "mission", "a2"),
        _conn("actor1_B", "o", "mission", "b1"),
        _conn("actor2_B", "o", "mission", "b2"),
    ]
    return SystemModel(
        name="CrossLink",
        definitions=(comm, controller, switch, crosslink, actor, mission),
        instances=tuple(instances),
        connections=tuple(connections),
        top_events=(
            TopEvent("loss_of_actuation", "mission", "o", "loss_of_actuation"),
        ),
    )


def crosslink_classic() -> FaultTree:
    """Hand-authored monolithic tree over the same 13 qualified events."""
    comm_A = EventNode("comm_A.comm_fail", P_DEFAULT)
    comm_B = EventNode("comm_B.comm_fail", P_DEFAULT)
    ecu_A = EventNode("ecu_A.fail", P_DEFAULT)
    ccu_A = EventNode("ccu_A.fail", P_DEFAULT)
    ecu_B = EventNode("ecu_B.fail", P_DEFAULT)
    ccu_B = EventNode("ccu_B.fail", P_DEFAULT)
    sw_A = EventNode("sw_A.sw_fail", P_DEFAULT)
    sw_B = EventNode("sw_B.sw_fail", P_DEFAULT)
    cl_int = EventNode("crosslink.cl_int", P_DEFAULT)
    a1 = EventNode("actor1_A.act_fail", P_DEFAULT)
    a2 = EventNode("actor2_A.act_fail", P_DEFAULT)
    b1 = EventNode("actor1_B.act_fail", P_DEFAULT)
    b2 = EventNode("actor2_B.act_fail", P_DEFAULT)

    channel_a_down = or_(
        comm_A,
        sw_A,
        and_(ecu_A, or_(ecu_B, cl_int), ccu_A, or_(ccu_B, cl_int)),
    )
    channel_b_down = or_(
        comm_B,
        sw_B,
        and_(ecu_B, or_(ecu_A, cl_int), ccu_B, or_(ccu_A, cl_int)),
    )
    side_a = or_(channel_a_down, a1, a2)
    side_b = or_(channel_b_down, b1, b2)
    return FaultTree(
        "ClassicCrossLink", {"loss_of_actuation": and_(side_a, side_b)}
    )


# --- fixture catalog ---

FIXTURES = {
    "situation_display": {
        "file": "situation_display.cft",
        "system": "SituationDisplay",
        "classic": "ClassicSituationDisplay",
        "build_system": situation_display_cft,
        "build_classic": situation_display_classic,
    },
    "crosslink": {
        "file": "crosslink.cft",
        "system": "CrossLink",
        "classic": "ClassicCrossLink",
        "build_system": crosslink_cft,
        "build_classic": crosslink_classic,
    },
}


def fixture_source(name: str) -> str:
    entry = FIXTURES[name]
    return (
        resources.files(__package__).joinpath("data", entry["file"])
        .read_text(encoding="utf-8")
    )


def scenario_catalog() -> dict:
    text = (
        resources.files(__package__).joinpath("data", "scenarios.json")
        .read_text(encoding="utf-8")
    )
    return json.loads(text)
