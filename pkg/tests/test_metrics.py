from cftkit.metrics import model_metrics
from cftkit.model import SystemModel
from cftkit.fixtures import crosslink_cft, situation_display_cft


def test_channel_reuse_count_is_two():
    report = model_metrics(situation_display_cft())
    assert report.reuse["Channel"] == 2


def test_plo_mode_declared_on_exactly_one_definition():
    report = model_metrics(situation_display_cft())
    owners = [d.name for d in report.definitions if "plo" in d.output_modes]
    assert owners == ["Processing"]


def test_empty_system_metrics_are_zero():
    report = model_metrics(SystemModel("Empty", (), (), (), ()))
    assert report.instance_count == 0
    assert report.top_event_count == 0
    assert report.flattened_node_count == 0
    assert report.flattened_depth == 0
    assert report.shared_node_count == 0
    assert report.reuse == {}


def test_crosslink_counts():
    report = model_metrics(crosslink_cft())
    assert report.instance_count == 14
    assert report.reuse == {
        "CommSource": 2,
        "Controller": 4,
        "Switch": 2,
        "CrossLink": 1,
        "Actor": 4,
        "Mission": 1,
    }
    assert report.top_event_count == 1
    # shared nodes exist: the cross link's internal event feeds four gates
    assert report.shared_node_count >= 1


def test_metrics_are_deterministic():
    a = model_metrics(crosslink_cft())
    b = model_metrics(crosslink_cft())
    assert a == b
