'''
exporters_tests.py: Holds the JSON and SVG writer tests
'''

import logging
import os
import unittest
import xml.etree.ElementTree as ElementTree

from testfixtures import TempDirectory

from heawood_ude.exceptions import ConfigurationError, HeawoodError
from heawood_ude.exporters.exporter import Exporter
from heawood_ude.exporters.json_document import (
    dumps_embeddings,
    load_embeddings)
from heawood_ude.exporters.svg import RenderStyle, render_svg
from heawood_ude.incidence import build_heawood_incidence
from heawood_ude.tests.fixtures import polished_tables

SVG = '{http://www.w3.org/2000/svg}'


class TestSvg(unittest.TestCase):
    """ Holds SVG rendering tests """

    def __init__(self, methodName='runTest'):
        super(TestSvg, self).__init__(methodName)
        self.e = polished_tables(60)[0]

    def parse(self, text):
        return ElementTree.fromstring(text)

    def test_counts(self):
        """ 21 edges, 14 markers, 14 labels """
        root = self.parse(render_svg(self.e))
        self.assertEqual(len(root.findall('.//' + SVG + 'line')), 21)
        self.assertEqual(len(root.findall('.//' + SVG + 'circle')), 14)
        labels = [t.text for t in root.findall('.//' + SVG + 'text')]
        self.assertEqual(sorted(labels),
                         sorted(['P' + str(i) for i in range(1, 8)] +
                                ['l' + str(i) for i in range(1, 8)]))

    def test_edges_are_flags(self):
        """ Every segment joins the two vertices of a flag """
        root = self.parse(render_svg(self.e))
        centres = {}
        for circle in root.findall('.//' + SVG + 'circle'):
            centres[(circle.get('cx'), circle.get('cy'))] = circle
        labels = {}
        for text, circle in zip(root.findall('.//' + SVG + 'text'),
                                root.findall('.//' + SVG + 'circle')):
            labels[(circle.get('cx'), circle.get('cy'))] = text.text
        flags = {(str(p), str(l)) for p, l in build_heawood_incidence().flags}
        for line in root.findall('.//' + SVG + 'line'):
            a = labels[(line.get('x1'), line.get('y1'))]
            b = labels[(line.get('x2'), line.get('y2'))]
            self.assertIn((a, b), flags)

    def test_deterministic(self):
        """ Rendering twice gives the same bytes """
        self.assertEqual(render_svg(self.e), render_svg(self.e))

    def test_y_up(self):
        """ P2 at y = 2 is drawn above P5 at y = 0 """
        root = self.parse(render_svg(self.e))
        heights = {t.text: float(t.get('y'))
                   for t in root.findall('.//' + SVG + 'text')}
        self.assertLess(heights['P2'], heights['P5'])
        self.assertAlmostEqual(heights['P5'] - heights['P2'], 400,
                               places=2)

    def test_style(self):
        """ Invalid styles are configuration errors """
        self.assertRaises(ConfigurationError, RenderStyle, scale=0)
        self.assertRaises(ConfigurationError, RenderStyle, vertex_radius=-1)
        text = render_svg(self.e, RenderStyle(point_colour='#000000'))
        self.assertIn('#000000', text)

    def test_export_files(self):
        """ One numbered file per embedding """
        with TempDirectory() as directory:
            written = Exporter.factory("SVG").export(
                polished_tables(60), os.path.join(directory.path, 'figs'),
                logging.getLogger('TestSvg'))
            self.assertEqual(len(written), 11)
            self.assertEqual(sorted(os.listdir(os.path.join(directory.path,
                                                            'figs'))),
                             ['embedding-%02d.svg' % i
                              for i in range(1, 12)])


class TestJson(unittest.TestCase):
    """ Holds JSON document tests """

    def test_round_trip(self):
        """ serialize -> parse -> serialize is byte-identical """
        text = dumps_embeddings(polished_tables(60))
        with TempDirectory() as directory:
            path = directory.write('embeddings.json', text.encode('ascii'))
            again = dumps_embeddings(load_embeddings(path))
        self.assertEqual(again, text)

    def test_export(self):
        """ The exporter writes the same document """
        with TempDirectory() as directory:
            path = os.path.join(directory.path, 'out.json')
            Exporter.factory("json").export(polished_tables(60), path,
                                            logging.getLogger('TestJson'))
            with open(path, 'r') as stream:
                self.assertEqual(stream.read(),
                                 dumps_embeddings(polished_tables(60)))

    def test_bad_document(self):
        """ Malformed input is a HeawoodError """
        with TempDirectory() as directory:
            path = directory.write('bad.json', b'[{"theta": "1"}]')
            self.assertRaises(HeawoodError, load_embeddings, path)
            self.assertRaises(HeawoodError, load_embeddings,
                              os.path.join(directory.path, 'missing.json'))

    def test_unknown_format(self):
        """ Unknown exporter names """
        self.assertIsNone(Exporter.factory("XML"))


if __name__ == '__main__':
    unittest.main()
