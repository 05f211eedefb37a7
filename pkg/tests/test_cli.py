import io
import json

import pytest

from networks.cli import run
from networks.documents import parse
from networks.services import NetworkFileService


def fixture_path(name):
    return str(NetworkFileService.FIXTURES_DIR / f"{name}.json")


def invoke(*argv):
    stdout, stderr = io.StringIO(), io.StringIO()
    status = run(list(argv), stdout=stdout, stderr=stderr)
    return status, stdout.getvalue(), stderr.getvalue()


class TestDispatch:
    def test_missing_command_is_a_usage_error(self):
        status, _, err = invoke()
        assert status == 2
        assert err.startswith('usage: cospan-tools')

    def test_unknown_command_is_a_usage_error(self):
        status, _, err = invoke('glue', 'a.json')
        assert status == 2
        assert 'cospan' in err

    def test_missing_required_option_is_a_usage_error(self):
        status, _, _ = invoke('cospan', 'id')
        assert status == 2

    def test_missing_action_is_a_usage_error(self):
        status, _, _ = invoke('cospan')
        assert status == 2


class TestCospanCommand:
    def test_compose_to_stdout(self):
        status, out, _ = invoke('cospan', 'compose', fixture_path('water'), fixture_path('dissociation'))
        assert status == 0
        doc = parse(out)
        assert doc.point_names == ('H', 'O', 'H2O', 'OH-', 'H3O+')
        assert doc.cospan.foot_in.size == 3
        assert doc.cospan.foot_out.size == 3

    def test_compose_to_file(self, tmp_path):
        target = tmp_path / 'composite.json'
        status, out, _ = invoke(
            'cospan', 'compose', fixture_path('water'), fixture_path('dissociation'), '-o', str(target)
        )
        assert status == 0
        assert f"Wrote {target}" in out
        payload = json.loads(target.read_text())
        assert len(payload['apex']['places']) == 5
        assert len(payload['apex']['transitions']) == 2

    def test_tensor(self):
        status, out, _ = invoke('cospan', 'tensor', fixture_path('water'), fixture_path('dissociation'))
        assert status == 0
        payload = json.loads(out)
        assert payload['foot_in'] == 4
        assert payload['foot_out'] == 4

    def test_mismatched_feet_fail_with_status_one(self):
        status, out, err = invoke('cospan', 'compose', fixture_path('water'), fixture_path('water'))
        assert status == 1
        assert out == ''
        assert err.startswith('mismatched-boundary')

    def test_iso_reports_the_bijection(self):
        status, out, _ = invoke('cospan', 'iso', fixture_path('open_graph_e5'), fixture_path('open_graph_e6'))
        assert status == 0
        assert out.splitlines() == [
            'isomorphic',
            'points: n1 -> n1, n2 -> n2, n3 -> n3, n4 -> n4',
            'arrows: e1 -> e1, e2 -> e2, e3 -> e3, e4 -> e4, e5 -> e6',
        ]

    def test_iso_of_different_networks(self, tmp_path):
        doc = json.loads(open(fixture_path('open_graph_e5')).read())
        doc['leg_out'] = [1]
        other = tmp_path / 'retargeted.json'
        other.write_text(json.dumps(doc))

        status, out, _ = invoke('cospan', 'iso', fixture_path('open_graph_e5'), str(other))
        assert status == 0
        assert out.strip() == 'not isomorphic'

    def test_iso_across_instances_fails(self):
        status, _, err = invoke('cospan', 'iso', fixture_path('water'), fixture_path('open_graph_e5'))
        assert status == 1
        assert err.startswith('mismatched-instance at $.instance')

    def test_identity(self):
        status, out, _ = invoke('cospan', 'id', '-n', '2', '--instance', 'petri')
        assert status == 0
        payload = json.loads(out)
        assert payload['instance'] == 'petri'
        assert payload['leg_in'] == payload['leg_out'] == [0, 1]
        assert payload['apex']['transitions'] == []

    def test_unreadable_document(self, tmp_path):
        status, _, err = invoke('cospan', 'compose', str(tmp_path / 'missing.json'), fixture_path('water'))
        assert status == 1
        assert err.startswith('malformed-json')

    def test_bad_document_reports_its_path(self, tmp_path):
        bad = tmp_path / 'bad.json'
        bad.write_text(json.dumps({'size': -1}))
        status, _, err = invoke('cospan', 'export-dot', str(bad))
        assert status == 1
        assert err.startswith('schema-violation at $.format_version')

    def test_export_dot(self):
        status, out, _ = invoke('cospan', 'export-dot', fixture_path('water'), '--rankdir', 'TB')
        assert status == 0
        assert out.startswith('digraph open_network {')
        assert 'rankdir=TB;' in out
        assert out.count('-> t0') == 3


class TestDomainCommands:
    def test_frobenius_check(self):
        status, out, _ = invoke('frobenius', 'check', '--instance', 'petri', '--size', '2', '--with-size', '1')
        assert status == 0
        assert out.splitlines()[0] == 'Frobenius laws on L(2) in petri:'
        assert 'special: ' in out
        assert out.splitlines()[-1] == 'all laws hold'

    def test_circuit_blackbox(self):
        status, out, _ = invoke('circuit', 'blackbox', fixture_path('series_resistors'))
        assert status == 0
        assert out.splitlines() == ['LinearRelation 2 -> 2, dimension 2', '[1, 0, 1, 0]', '[0, 1, 3, 1]']

    def test_circuit_rejects_zero_resistance(self):
        status, _, err = invoke('circuit', 'relation', '--resistor', '0')
        assert status == 1
        assert err.startswith('nonpositive-resistance')

    def test_petri_to_cmc(self):
        status, out, _ = invoke('petri', 'to-cmc', fixture_path('water'))
        assert status == 0
        assert out.splitlines() == ['objects: H, O, H2O', 'generators:', '  alpha: 2*H + O -> H2O']

    def test_petri_reachable_in_composite(self, tmp_path):
        composite = tmp_path / 'composite.json'
        invoke('cospan', 'compose', fixture_path('water'), fixture_path('dissociation'), '-o', str(composite))

        status, out, _ = invoke(
            'petri', 'reachable', str(composite), '--from', 'H:4,O:2', '--to', 'OH-:1,H3O+:1', '--max-steps', '3'
        )
        assert status == 0
        assert out.splitlines() == ['reachable: true', 'witness: alpha, alpha, beta']

    def test_petri_unreachable(self):
        status, out, _ = invoke('petri', 'reachable', fixture_path('water'), '--from', 'H:1', '--to', 'H2O:1')
        assert status == 0
        assert out.strip() == 'reachable: false'

    def test_petri_needs_a_net(self):
        status, _, err = invoke('petri', 'to-cmc', fixture_path('open_graph_e5'))
        assert status == 1
        assert err.startswith('mismatched-boundary')

    def test_dynamics_eval(self):
        status, out, _ = invoke('dynamics', 'eval', fixture_path('water'), '--at', 'H:1,O:1,H2O:0')
        assert status == 0
        assert out.splitlines() == ['H: -2', 'O: -1', 'H2O: 1']

    def test_dynamics_steady(self):
        status, out, _ = invoke('dynamics', 'steady', fixture_path('water'), '--at', 'O:1,H2O:3')
        assert status == 0
        assert out.strip() == 'steady: true'

    def test_dynamics_euler(self):
        status, out, _ = invoke(
            'dynamics', 'euler', fixture_path('water'), '--at', 'H:1,O:1', '--h', '1/10', '--steps', '1'
        )
        assert status == 0
        assert out.splitlines() == ['step 0: H=1, O=1, H2O=0', 'step 1: H=4/5, O=9/10, H2O=1/10']

    @pytest.mark.parametrize('at', ['X:1', 'H:-1', 'H:1,H:2'])
    def test_dynamics_rejects_bad_concentrations(self, at):
        status, _, err = invoke('dynamics', 'eval', fixture_path('water'), '--at', at)
        assert status == 1
        assert err.startswith('schema-violation')
