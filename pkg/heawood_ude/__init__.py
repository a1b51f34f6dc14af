'''
__init__.py: Unit distance embeddings of the Heawood graph
'''

__version__ = '1.0.0'
