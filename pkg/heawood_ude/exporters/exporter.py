'''
exporter.py: Holds the exporters common behaviour
'''

import os


class Exporter(object):

    @staticmethod
    def factory(export_type, style=None):
        export_type = export_type.upper()
        if export_type == "JSON":
            from heawood_ude.exporters.json_document import JsonExporter
            return JsonExporter()
        elif export_type == "SVG":
            from heawood_ude.exporters.svg import SvgExporter
            return SvgExporter(style)
        else:
            return None

    def export(self, embeddings, target, logger):
        """
        Writes a list of embeddings

        @type embeddings: list of EmbeddingCandidate
        @type target: string
        @param target: file or directory path, as the format requires
        @rtype list of string
        @return written paths
        """
        written = []
        for name, text in self._documents(embeddings):
            path = self._path(target, name)
            parent = os.path.dirname(path)
            if parent and not os.path.isdir(parent):
                os.makedirs(parent)
            with open(path, 'w') as output:
                output.write(text)
            written.append(path)
        logger.info("Wrote " + str(len(written)) + " file(s) to '" +
                    target + "'")
        return written

    #   ################ ABSTRACT METHODS ################
    def _documents(self, embeddings):
        """
        Serializes the embeddings

        @rtype list of (name, text)
        @return one entry per file to write; name is None when the target
            itself is the file
        """
        raise NotImplementedError("'_documents' not implemented.")
    #   ##################################################

    def _path(self, target, name):
        return target if name is None else os.path.join(target, name)
