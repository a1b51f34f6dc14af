'''
__init__.py: Writers for embeddings, certificates and figures
'''
