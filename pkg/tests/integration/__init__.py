"""__init__.py for integration tests"""
