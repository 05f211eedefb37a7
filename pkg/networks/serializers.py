from rest_framework import serializers

from core.instances import INSTANCES

DOCUMENT_INSTANCES = ['graph', 'lgraph', 'petri', 'petri_rates']


class NetworkDocumentSerializer(serializers.Serializer):
    """The envelope shared by every open network document; the apex is checked per instance."""

    format_version = serializers.CharField()
    instance = serializers.ChoiceField(choices=DOCUMENT_INSTANCES)
    foot_in = serializers.IntegerField(min_value=0)
    foot_out = serializers.IntegerField(min_value=0)
    apex = serializers.DictField()
    leg_in = serializers.ListField(child=serializers.IntegerField(min_value=0))
    leg_out = serializers.ListField(child=serializers.IntegerField(min_value=0))

    def validate_instance(self, value):
        if value not in INSTANCES:
            raise serializers.ValidationError(f"instance {value!r} is not available")
        return value

    def validate(self, data):
        for leg, foot in (('leg_in', 'foot_in'), ('leg_out', 'foot_out')):
            if len(data[leg]) != data[foot]:
                raise serializers.ValidationError(
                    {leg: [f"{foot} is {data[foot]} but the leg lists {len(data[leg])} images"]}
                )
        return data


class EdgeField(serializers.ListField):
    child = serializers.IntegerField(min_value=0)

    def __init__(self, **kwargs):
        super().__init__(min_length=2, max_length=2, **kwargs)


class GraphApexSerializer(serializers.Serializer):
    nodes = serializers.IntegerField(min_value=0)
    edges = serializers.ListField(child=EdgeField(), default=list)
    node_names = serializers.ListField(child=serializers.CharField(trim_whitespace=False), required=False)
    edge_names = serializers.ListField(child=serializers.CharField(trim_whitespace=False), required=False)

    def validate(self, data):
        for i, (s, t) in enumerate(data['edges']):
            for end in (s, t):
                if end >= data['nodes']:
                    raise serializers.ValidationError(
                        {'edges': {i: [f"node {end} outside {data['nodes']} nodes"]}}, code='index-out-of-range'
                    )
        for key, size in (('node_names', data['nodes']), ('edge_names', len(data['edges']))):
            if key in data and len(data[key]) != size:
                raise serializers.ValidationError({key: [f"expected {size} names, got {len(data[key])}"]})
        return data


class LGraphApexSerializer(GraphApexSerializer):
    labels = serializers.ListField(child=serializers.CharField())

    def validate(self, data):
        data = super().validate(data)
        if len(data['labels']) != len(data['edges']):
            raise serializers.ValidationError(
                {'labels': [f"expected {len(data['edges'])} labels, got {len(data['labels'])}"]}
            )
        return data


class TransitionSerializer(serializers.Serializer):
    name = serializers.CharField(required=False, trim_whitespace=False)
    # "in" is a keyword, so the fields are declared by name below
    rate = serializers.CharField(required=False)

    def get_fields(self):
        fields = super().get_fields()
        fields['in'] = serializers.DictField(child=serializers.IntegerField(min_value=0), default=dict)
        fields['out'] = serializers.DictField(child=serializers.IntegerField(min_value=0), default=dict)
        return fields


class PetriApexSerializer(serializers.Serializer):
    places = serializers.ListField(child=serializers.CharField(trim_whitespace=False))
    transitions = TransitionSerializer(many=True, default=list)

    def validate(self, data):
        known = set(data['places'])
        for i, transition in enumerate(data['transitions']):
            for side in ('in', 'out'):
                for place in transition[side]:
                    if place not in known:
                        raise serializers.ValidationError(
                            {'transitions': {i: {side: {place: [f"unknown place {place!r}"]}}}},
                            code='index-out-of-range',
                        )
        return data


class PetriRatesApexSerializer(PetriApexSerializer):
    def validate(self, data):
        data = super().validate(data)
        for i, transition in enumerate(data['transitions']):
            if 'rate' not in transition:
                raise serializers.ValidationError({'transitions': {i: {'rate': ["a rate is required"]}}})
        return data


APEX_SERIALIZERS = {
    'graph': GraphApexSerializer,
    'lgraph': LGraphApexSerializer,
    'petri': PetriApexSerializer,
    'petri_rates': PetriRatesApexSerializer,
}
