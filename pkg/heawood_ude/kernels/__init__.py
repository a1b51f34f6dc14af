'''
__init__.py: Scalar back-ends for the geometry of the construction chain
'''
