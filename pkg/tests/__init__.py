"""Pytest tests for selfdeg"""
