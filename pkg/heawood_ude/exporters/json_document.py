'''
json_document.py: Embeddings as a JSON array of chain-schema objects
'''

import json

from heawood_ude.chain import EmbeddingCandidate
from heawood_ude.exceptions import HeawoodError
from heawood_ude.exporters.exporter import Exporter


def dumps(documents):
    """ Deterministic text of any JSON-compatible data """
    return json.dumps(documents, indent=2) + '\n'


def dumps_embeddings(embeddings):
    return dumps([e.to_dict() for e in embeddings])


def load_embeddings(path):
    """
    @rtype list of EmbeddingCandidate
    @raise HeawoodError: unreadable or malformed document
    """
    try:
        with open(path, 'r') as stream:
            data = json.load(stream)
        return [EmbeddingCandidate.from_dict(item) for item in data]
    except (OSError, ValueError, KeyError, TypeError) as err:
        raise HeawoodError("cannot read embeddings from '" + path + "': " +
                           str(err))


class JsonExporter(Exporter):

    def _documents(self, embeddings):
        return [(None, dumps_embeddings(embeddings))]
